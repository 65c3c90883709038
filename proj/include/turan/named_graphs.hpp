#pragma once

#include <stdexcept>
#include <string>

#include "turan/graph.hpp"

namespace turan {

inline Graph complete_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

inline Graph path_graph(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

inline Graph empty_graph(int n) { return build_graph(n, {}); }

/// Standard Petersen graph: outer cycle 0..4, inner pentagram 5..9,
/// spokes i -- i+5.
inline Graph petersen_graph() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return build_graph(10, e);
}

/// Parses built-in graph names: "petersen", "k_A_B", "k_N", "c_N", "p_N",
/// "empty_N". Throws on anything else.
inline Graph named_graph(const std::string& name) {
    auto num = [](const std::string& s) {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("named_graph: bad number '" + s + "'");
        return v;
    };
    if (name == "petersen") return petersen_graph();
    auto sep = name.find('_');
    if (sep == std::string::npos) throw std::invalid_argument("named_graph: unknown graph '" + name + "'");
    std::string head = name.substr(0, sep), rest = name.substr(sep + 1);
    if (head == "c") return cycle_graph(num(rest));
    if (head == "p") return path_graph(num(rest));
    if (head == "empty") return empty_graph(num(rest));
    if (head == "k") {
        auto sep2 = rest.find('_');
        if (sep2 == std::string::npos) return complete_graph(num(rest));
        int a = num(rest.substr(0, sep2)), b = num(rest.substr(sep2 + 1));
        EdgeList e;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
        return build_graph(a + b, e);
    }
    throw std::invalid_argument("named_graph: unknown graph '" + name + "'");
}

} // namespace turan
