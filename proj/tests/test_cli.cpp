#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "turan/constructions.hpp"
#include "turan/graph_io.hpp"

#ifndef TURAN_CLI_PATH
#error "TURAN_CLI_PATH must point at the built CLI"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TURAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("cli count") {
    RunResult r = run_cli("count --named petersen --cycle 5");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == "12");
    CHECK(j["pattern"] == "cycle");
    CHECK(j["n"] == 10);

    // the report shape, field by field
    auto k28 = nlohmann::json::parse(run_cli("count --named k_2_8 --cycle 4").out);
    CHECK(k28 == nlohmann::json({{"pattern", "cycle"}, {"k", 4}, {"count", "28"}, {"n", 10}, {"m", 16}}));

    auto walks = nlohmann::json::parse(run_cli("count --named c_4 --walk 3").out);
    CHECK(walks["count"] == "16");
    CHECK(walks["pattern"] == "walk");

    CHECK(run_cli("count --named petersen").exit_code == 1);   // no pattern picked
}

TEST_CASE("cli forbid-check exit codes") {
    CHECK(run_cli("forbid-check --named k_2_3 --lengths 6").exit_code == 0);
    RunResult r = run_cli("forbid-check --named k_3_3 --lengths 6");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("witness C6:") != std::string::npos);
}

TEST_CASE("cli construct") {
    RunResult r = run_cli("construct complete_bipartite --param a=2 --param b=3");
    CHECK(r.exit_code == 0);
    CHECK(turan::read_edge_list(r.out) == turan::complete_bipartite(2, 3));

    RunResult g6 = run_cli("construct theta --param l=3 --param t=3 --format graph6");
    CHECK(g6.exit_code == 0);
    std::string line = g6.out.substr(0, g6.out.find('\n'));
    CHECK(turan::read_graph6(line) == turan::theta_graph(3, 3));

    RunResult spec = run_cli("construct blown_cycle --param two_l=6 --param b=3 --spec");
    CHECK(spec.exit_code == 0);
    auto j = nlohmann::json::parse(spec.out);
    CHECK(j["name"] == "blown_cycle");
    CHECK(j["guaranteed"]["at_least"] == "27");

    CHECK(run_cli("construct no_such_thing").exit_code == 1);
}

TEST_CASE("cli search") {
    RunResult r = run_cli("search --n 5 --target cycle:4 --forbid 6");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["maximum"] == "15");
    CHECK(j["method"] == "naive");

    RunResult table = run_cli("search --n-min 4 --n-max 5 --target cycle:4 --forbid 6 --method pruned");
    CHECK(table.exit_code == 0);
    CHECK(table.out.rfind("n,target,forbidden,max,witness_graph6\n", 0) == 0);
}

TEST_CASE("cli reduce is deterministic") {
    std::string args = "reduce --named k_4_4 --lemma bipartition --cycle-len 4 --trials 300 --seed 9";
    RunResult a = run_cli(args), b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    double mean = j["mean"];
    CHECK(mean > 0.05);
    CHECK(mean < 0.2);
    CHECK(j["analytic_floor"] == "1/8");
}

TEST_CASE("cli spectral") {
    RunResult r = run_cli("spectral --named k_4_9");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    double mu = j["mu"];
    CHECK(mu == Catch::Approx(6.0).margin(1e-8));

    RunResult chain = run_cli("spectral --named k_10_10 --l 3 --forbid 5");
    CHECK(chain.exit_code == 0);
    auto cj = nlohmann::json::parse(chain.out);
    CHECK(cj["chain_holds"] == true);
    CHECK(cj["free"] == true);
    CHECK(cj["path_bound_holds"] == true);
}

TEST_CASE("cli verify") {
    RunResult r = run_cli("verify thm3");
    CHECK(r.exit_code == 0);
    std::string first = r.out.substr(0, r.out.find('\n'));
    auto j = nlohmann::json::parse(first);
    CHECK(j["suite"] == "thm3");
    CHECK(j["pass"] == true);
    CHECK(r.out.find("suite,case,relation,expected,measured,pass") != std::string::npos);

    CHECK(run_cli("verify thm999").exit_code == 1);
}

TEST_CASE("cli verify all is deterministic byte for byte") {
    RunResult a = run_cli("verify all --seed 3");
    RunResult b = run_cli("verify all --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli verify config override") {
    const char* path = "cli_verify_config.tmp";
    {
        std::ofstream out(path);
        out << "lemma51.trials = 500\nseed = 4\n";
    }
    RunResult r = run_cli(std::string("verify lemma51 --config ") + path);
    std::remove(path);
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out.substr(0, r.out.find('\n')))["pass"] == true);

    CHECK(run_cli("verify thm3 --config does_not_exist.cfg").exit_code == 1);
}

TEST_CASE("cli sharded counting matches single-threaded") {
    RunResult one = run_cli("count --named k_8_8 --cycle 8");
    std::string cmd = std::string("env TURAN_THREADS=3 ") + TURAN_CLI_PATH +
                      " count --named k_8_8 --cycle 8 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    pclose(pipe);
    CHECK(one.out == out);
    CHECK(nlohmann::json::parse(out)["count"] == "352800");
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("search --target cycle:4 --forbid 6").exit_code == 1);   // no n
}
