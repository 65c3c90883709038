#pragma once

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/graph_io.hpp"
#include "turan/reductions.hpp"
#include "turan/search.hpp"
#include "turan/spectral.hpp"

namespace turan {

using Json = nlohmann::json;

/// Counts serialize as decimal strings: they outgrow JSON numbers.
inline Json to_json(const CountReport& r) {
    return Json{{"pattern", pattern_name(r.pattern)}, {"k", r.k}, {"count", r.count.str()},
                {"n", r.n},  {"m", r.m}};
}

inline Json to_json(const RetentionEstimate& e) {
    return Json{{"reduction", e.reduction == ReductionKind::Bipartition ? "bipartition" : "cyclic"},
                {"cycle_length", e.cycle_length},
                {"classes", e.classes},
                {"trials", e.trials},
                {"base_count", e.base_count.str()},
                {"mean", e.mean},
                {"standard_error", e.standard_error},
                {"analytic_floor", e.analytic_floor.str()}};
}

inline Json to_json(const SpectralReport& r) {
    Json j{{"mu", r.mu},
           {"residual", r.residual},
           {"iterations", r.iterations},
           {"converged", r.converged},
           {"edgeless", r.edgeless}};
    if (r.l >= 2) {
        j["l"] = r.l;
        j["walk_ratio"] = r.walk_ratio.str();
        j["path_lhs"] = r.path_lhs.str();
        j["chain_holds"] = r.chain_holds;
    }
    return j;
}

inline Json to_json(const ExtremalRecord& r) {
    Json forb = Json::array();
    for (int k : r.forbidden.lengths) forb.push_back(k);
    return Json{{"n", r.n},
                {"target", r.target.str()},
                {"forbidden", forb},
                {"maximum", r.maximum.str()},
                {"witness_graph6", write_graph6(r.witness)},
                {"method", r.method}};
}

inline Json to_json(const ConstructionSpec& s) {
    Json params = Json::object();
    for (const auto& [k, v] : s.params) params[k] = v;
    Json forb = Json::array();
    for (int k : s.expected_free.lengths) forb.push_back(k);
    Json j{{"name", s.name}, {"params", params}, {"expected_free", forb}};
    if (s.guaranteed)
        j["guaranteed"] = Json{{"pattern", pattern_name(s.guaranteed->pattern)},
                               {"k", s.guaranteed->k},
                               {"at_least", s.guaranteed->at_least.str()}};
    return j;
}

inline std::string extremal_csv(const std::vector<ExtremalRecord>& rows) {
    std::ostringstream out;
    out << "n,target,forbidden,max,witness_graph6\n";
    for (const auto& r : rows) {
        std::string forb;
        for (int k : r.forbidden.lengths) forb += (forb.empty() ? "" : ";") + std::to_string(k);
        out << r.n << ',' << r.target.str() << ',' << forb << ',' << r.maximum.str() << ','
            << write_graph6(r.witness) << '\n';
    }
    return out.str();
}

} // namespace turan
