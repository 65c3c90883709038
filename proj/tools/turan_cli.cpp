// turan: exact workbench for cycle/path counts under forbidden-cycle
// constraints. Subcommands: construct, count, forbid-check, reduce,
// spectral, search, verify, bench. Exit codes: 0 ok, 1 usage, 2 check
// failed.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "turan/berge.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/forbidden.hpp"
#include "turan/graph_io.hpp"
#include "turan/named_graphs.hpp"
#include "turan/reductions.hpp"
#include "turan/search.hpp"
#include "turan/serialize.hpp"
#include "turan/spectral.hpp"
#include "turan/verify.hpp"

namespace {

using namespace turan;

Graph load_graph(const std::string& file, const std::string& named) {
    if (!named.empty()) return named_graph(named);
    if (!file.empty()) return read_graph_file(file);
    throw CLI::ValidationError("provide --graph FILE or --named NAME");
}

ForbiddenSet parse_lengths(const std::string& csv) {
    std::set<int> ls;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) ls.insert(std::stoi(tok));
    return ForbiddenSet(ls);
}

Target parse_target(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--target expects cycle:K or path:K");
    std::string kind = s.substr(0, colon);
    int k = std::stoi(s.substr(colon + 1));
    if (kind == "cycle") return Target::cycle(k);
    if (kind == "path") return Target::path(k);
    throw CLI::ValidationError("--target expects cycle:K or path:K");
}

long long param_of(const std::map<std::string, long long>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw CLI::ValidationError("construct: missing --param " + key + "=...");
    return it->second;
}

long long param_or(const std::map<std::string, long long>& params, const std::string& key, long long dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
}

struct ConstructResult {
    Graph graph;
    std::optional<ConstructionSpec> spec;
};

ConstructResult run_construct(const std::string& name, const std::map<std::string, long long>& p,
                              const std::string& hypergraph_file) {
    auto load_h = [&]() {
        if (hypergraph_file.empty()) return Hypergraph{};
        std::ifstream in(hypergraph_file);
        if (!in) throw std::runtime_error("cannot open hypergraph file: " + hypergraph_file);
        return read_hypergraph(in);
    };
    if (name == "complete_bipartite") {
        int a = static_cast<int>(param_of(p, "a")), b = static_cast<int>(param_of(p, "b"));
        return {complete_bipartite(a, b), complete_bipartite_spec(a, b)};
    }
    if (name == "theta") {
        int l = static_cast<int>(param_of(p, "l")), t = static_cast<int>(param_of(p, "t"));
        return {theta_graph(l, t), theta_graph_spec(l, t)};
    }
    if (name == "theta_of_cycle") {
        int n = static_cast<int>(param_of(p, "n")), m = static_cast<int>(param_of(p, "m")),
            l = static_cast<int>(param_of(p, "l"));
        return {theta_of_graph(n, cycle_graph(m), l), theta_of_cycle_spec(n, m, l)};
    }
    if (name == "theta_of_path") {
        int n = static_cast<int>(param_of(p, "n")), pp = static_cast<int>(param_of(p, "p")),
            l = static_cast<int>(param_of(p, "l"));
        return {theta_of_graph(n, path_graph(pp), l), std::nullopt};
    }
    if (name == "blown_cycle") {
        int two_l = static_cast<int>(param_of(p, "two_l")), b = static_cast<int>(param_of(p, "b"));
        return {blown_up_cycle(two_l, b), blown_up_cycle_spec(two_l, b)};
    }
    if (name == "blown_cycle_n") {
        int two_l = static_cast<int>(param_of(p, "two_l")), n = static_cast<int>(param_of(p, "n"));
        return {blown_up_cycle_order(two_l, n), std::nullopt};
    }
    if (name == "blown_path") {
        int l = static_cast<int>(param_of(p, "l")), b = static_cast<int>(param_of(p, "b"));
        return {blown_up_path(l, b), blown_up_path_spec(l, b)};
    }
    if (name == "polarity") {
        int q = static_cast<int>(param_of(p, "q"));
        return {polarity_graph(q), polarity_graph_spec(q)};
    }
    if (name == "berge_expansion") {
        Hypergraph h;
        int girth_floor;
        if (!hypergraph_file.empty()) {
            h = load_h();
            girth_floor = static_cast<int>(param_or(p, "g", 3));
        } else {
            int n = static_cast<int>(param_of(p, "n")), r = static_cast<int>(param_of(p, "r"));
            girth_floor = static_cast<int>(param_of(p, "g"));
            int m = static_cast<int>(param_of(p, "m"));
            std::uint64_t seed = static_cast<std::uint64_t>(param_or(p, "seed", 1));
            h = random_greedy_hypergraph(n, r, girth_floor, m, seed);
        }
        int c = static_cast<int>(param_or(p, "c", h.edges.empty() ? 3 : static_cast<long long>(h.edges[0].size())));
        return {hyperedge_cycle_expansion(h, c), hyperedge_cycle_expansion_spec(h, c, girth_floor)};
    }
    if (name == "incidence_expansion") {
        int s = static_cast<int>(param_of(p, "s"));
        Hypergraph h;
        if (!hypergraph_file.empty()) {
            h = load_h();
        } else {
            int r = static_cast<int>(param_of(p, "r")), d = static_cast<int>(param_of(p, "d")),
                g = static_cast<int>(param_of(p, "g"));
            std::uint64_t seed = static_cast<std::uint64_t>(param_or(p, "seed", 1));
            auto found = regular_uniform_high_girth(r, d, g, seed);
            if (!found) throw std::runtime_error("incidence_expansion: regular hypergraph not found");
            h = *found;
        }
        return {incidence_expansion(h, s), std::nullopt};
    }
    throw CLI::ValidationError("construct: unknown name '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting workbench for cycles and paths under forbidden-cycle constraints"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "emit a named construction");
    std::string construct_name, construct_format = "edgelist", construct_hfile;
    std::vector<std::string> construct_params;
    bool construct_spec_only = false;
    c_construct->add_option("name", construct_name, "construction name")->required();
    c_construct->add_option("--param", construct_params, "k=v pairs");
    c_construct->add_option("--format", construct_format, "edgelist|graph6");
    c_construct->add_option("--hypergraph", construct_hfile, "hypergraph input file");
    c_construct->add_flag("--spec", construct_spec_only, "print the ConstructionSpec JSON instead");

    // count
    auto* c_count = app.add_subcommand("count", "exact copy count");
    std::string count_graph, count_named;
    int count_cycle = 0, count_path = 0, count_walk = 0;
    c_count->add_option("--graph", count_graph, "graph file (edge list or graph6)");
    c_count->add_option("--named", count_named, "built-in graph (petersen, k_A_B, c_N, p_N)");
    c_count->add_option("--cycle", count_cycle, "cycle length");
    c_count->add_option("--path", count_path, "path vertex count");
    c_count->add_option("--walk", count_walk, "walk vertex count");

    // forbid-check
    auto* c_forbid = app.add_subcommand("forbid-check", "check C_A-freeness");
    std::string forbid_graph, forbid_named, forbid_lengths;
    c_forbid->add_option("--graph", forbid_graph, "graph file");
    c_forbid->add_option("--named", forbid_named, "built-in graph");
    c_forbid->add_option("--lengths", forbid_lengths, "comma-separated cycle lengths")->required();

    // reduce
    auto* c_reduce = app.add_subcommand("reduce", "randomized reduction retention estimate");
    std::string reduce_graph, reduce_named, reduce_lemma = "bipartition";
    int reduce_classes = 5, reduce_cycle = 4, reduce_trials = 1000;
    std::uint64_t reduce_seed = 1;
    c_reduce->add_option("--graph", reduce_graph, "graph file");
    c_reduce->add_option("--named", reduce_named, "built-in graph");
    c_reduce->add_option("--lemma", reduce_lemma, "bipartition|cyclic")->required();
    c_reduce->add_option("--classes", reduce_classes, "class count (cyclic)");
    c_reduce->add_option("--cycle-len", reduce_cycle, "cycle length to track")->required();
    c_reduce->add_option("--trials", reduce_trials, "Monte-Carlo trials");
    c_reduce->add_option("--seed", reduce_seed, "seed");

    // spectral
    auto* c_spectral = app.add_subcommand("spectral", "spectral radius and walk chain");
    std::string spectral_graph, spectral_named;
    int spectral_l = 0, spectral_forbid = 0;
    double spectral_tol = 1e-12;
    c_spectral->add_option("--graph", spectral_graph, "graph file");
    c_spectral->add_option("--named", spectral_named, "built-in graph");
    c_spectral->add_option("--l", spectral_l, "walk/path vertex count");
    c_spectral->add_option("--forbid", spectral_forbid, "odd cycle length 2k+1 to certify and bound");
    c_spectral->add_option("--tol", spectral_tol, "power-iteration tolerance");

    // search
    auto* c_search = app.add_subcommand("search", "exhaustive extremal search");
    int search_n = 0, search_nmin = 0, search_nmax = 0;
    std::string search_target, search_forbid, search_method = "naive";
    c_search->add_option("--n", search_n, "single order");
    c_search->add_option("--n-min", search_nmin, "range start");
    c_search->add_option("--n-max", search_nmax, "range end");
    c_search->add_option("--target", search_target, "cycle:K or path:K")->required();
    c_search->add_option("--forbid", search_forbid, "comma-separated lengths")->required();
    c_search->add_option("--method", search_method, "naive|pruned");

    // verify
    auto* c_verify = app.add_subcommand("verify", "run theorem verification suites");
    std::string verify_suite, verify_config;
    std::uint64_t verify_seed = 0;
    bool verify_seed_set = false;
    c_verify->add_option("suite", verify_suite, "suite id or 'all'")->required();
    c_verify->add_option("--config", verify_config, "key=value tolerance overrides");
    c_verify->add_option("--seed", verify_seed, "seed override")->each([&](const std::string&) {
        verify_seed_set = true;
    });

    // bench
    auto* c_bench = app.add_subcommand("bench", "timing of the counting kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c_construct) {
            std::map<std::string, long long> params;
            for (const auto& kv : construct_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw CLI::ValidationError("--param expects k=v");
                params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
            }
            ConstructResult res = run_construct(construct_name, params, construct_hfile);
            if (construct_spec_only) {
                if (!res.spec) throw std::runtime_error("no ConstructionSpec for '" + construct_name + "'");
                std::cout << to_json(*res.spec).dump() << "\n";
            } else {
                GraphFormat fmt = construct_format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
                std::cout << write_graph(res.graph, fmt);
            }
            return 0;
        }

        if (*c_count) {
            Graph g = load_graph(count_graph, count_named);
            CountReport rep;
            if (count_cycle > 0)
                rep = count_cycles(g, count_cycle);
            else if (count_path > 0)
                rep = count_paths(g, count_path);
            else if (count_walk > 0)
                rep = count_walks(g, count_walk);
            else
                throw CLI::ValidationError("count: pick one of --cycle/--path/--walk");
            std::cout << to_json(rep).dump() << "\n";
            return 0;
        }

        if (*c_forbid) {
            Graph g = load_graph(forbid_graph, forbid_named);
            FreeCheck chk = is_free(g, parse_lengths(forbid_lengths));
            if (chk.free) {
                std::cout << "free\n";
                return 0;
            }
            std::cout << "witness C" << chk.violated_length << ":";
            for (int v : chk.witness) std::cout << ' ' << v;
            std::cout << "\n";
            return 2;
        }

        if (*c_reduce) {
            Graph g = load_graph(reduce_graph, reduce_named);
            ReductionKind kind;
            if (reduce_lemma == "bipartition")
                kind = ReductionKind::Bipartition;
            else if (reduce_lemma == "cyclic")
                kind = ReductionKind::CyclicPartition;
            else
                throw CLI::ValidationError("--lemma expects bipartition|cyclic");
            RetentionEstimate est =
                estimate_retention(g, reduce_cycle, kind, reduce_classes, reduce_trials, reduce_seed);
            std::cout << to_json(est).dump() << "\n";
            return 0;
        }

        if (*c_spectral) {
            Graph g = load_graph(spectral_graph, spectral_named);
            SpectralReport rep = spectral_l >= 2 ? walk_chain_check(g, spectral_l, 1e-6, spectral_tol)
                                                 : spectral_radius(g, spectral_tol);
            Json j = to_json(rep);
            bool failed = spectral_l >= 2 && !rep.chain_holds;
            if (spectral_forbid >= 3) {
                FreeCheck chk = is_free(g, ForbiddenSet{spectral_forbid});
                j["forbid"] = spectral_forbid;
                j["free"] = chk.free;
                if (chk.free && spectral_forbid % 2 == 1 && spectral_l >= 1) {
                    PathBoundReport pb = path_upper_bound_check(g, spectral_l, true);
                    j["path_bound_holds"] = pb.holds;
                    if (!pb.holds) failed = true;
                } else if (!chk.free) {
                    failed = true;
                }
            }
            std::cout << j.dump() << "\n";
            return failed ? 2 : 0;
        }

        if (*c_search) {
            Target target = parse_target(search_target);
            ForbiddenSet forbidden = parse_lengths(search_forbid);
            bool pruned = search_method == "pruned";
            if (search_n > 0) {
                ExtremalRecord rec = pruned ? exact_extremal_pruned(search_n, target, forbidden)
                                            : exact_extremal_naive(search_n, target, forbidden);
                std::cout << to_json(rec).dump() << "\n";
            } else {
                if (search_nmin <= 0 || search_nmax < search_nmin)
                    throw CLI::ValidationError("search: give --n or --n-min/--n-max");
                auto rows = extremal_table(search_nmin, search_nmax, target, forbidden, pruned);
                std::cout << extremal_csv(rows);
            }
            return 0;
        }

        if (*c_verify) {
            VerifyConfig cfg = verify_config.empty() ? VerifyConfig{} : VerifyConfig::from_file(verify_config);
            if (verify_seed_set) cfg.seed = verify_seed;
            std::vector<std::string> ids =
                verify_suite == "all" ? verify_suite_ids() : std::vector<std::string>{verify_suite};
            bool all_pass = true;
            std::vector<VerifySuite> suites;
            for (const auto& id : ids) {
                VerifySuite s = run_verify_suite(id, cfg);
                all_pass = all_pass && s.pass();
                std::cout << to_json(s).dump() << "\n";
                suites.push_back(std::move(s));
            }
            for (const auto& s : suites) std::cout << suite_csv(s);
            return all_pass ? 0 : 2;
        }

        if (*c_bench) {
            auto time_ms = [](auto&& fn) {
                auto t0 = std::chrono::steady_clock::now();
                fn();
                auto t1 = std::chrono::steady_clock::now();
                return std::chrono::duration<double, std::milli>(t1 - t0).count();
            };
            std::cout << "workload,value,ms\n";
            {
                Graph g = complete_bipartite(8, 8);
                Count c;
                double ms = time_ms([&] { c = count_cycles(g, 8).count; });
                std::cout << "count_cycles(K_8_8;C8)," << c.str() << "," << ms << "\n";
            }
            {
                Graph g = polarity_graph(7);
                Count c;
                double ms = time_ms([&] { c = count_cycles(g, 6).count; });
                std::cout << "count_cycles(polarity(7);C6)," << c.str() << "," << ms << "\n";
            }
            {
                Graph g = polarity_graph(7);
                std::optional<int> gg;
                double ms = time_ms([&] { gg = girth(g); });
                std::cout << "girth(polarity(7))," << (gg ? std::to_string(*gg) : "inf") << "," << ms << "\n";
            }
            {
                Graph g = complete_bipartite(12, 12);
                Count c;
                double ms = time_ms([&] { c = count_paths(g, 6).count; });
                std::cout << "count_paths(K_12_12;P6)," << c.str() << "," << ms << "\n";
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
