#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "turan/verify.hpp"

using namespace turan;

namespace {

VerifyConfig quick_config() {
    VerifyConfig cfg;
    cfg.lemma51_trials = 2000;
    cfg.lemma52_trials = 5000;
    cfg.thm18_graphs = 10;
    cfg.thm23_graphs = 8;
    return cfg;
}

} // namespace

TEST_CASE("every suite passes at reduced grids") {
    VerifyConfig cfg = quick_config();
    for (const auto& id : verify_suite_ids()) {
        VerifySuite s = run_verify_suite(id, cfg);
        INFO("suite " << id);
        for (const auto& c : s.cases) {
            INFO(c.name << ": expected " << c.relation << " " << c.expected << ", measured " << c.measured);
            CHECK(c.pass);
        }
    }
    CHECK_THROWS_AS(run_verify_suite("thm999", cfg), std::invalid_argument);
}

TEST_CASE("suites are deterministic per seed") {
    VerifyConfig cfg = quick_config();
    for (const std::string id : {"thm18", "lemma51", "thm9"}) {
        std::string a = to_json(run_verify_suite(id, cfg)).dump();
        std::string b = to_json(run_verify_suite(id, cfg)).dump();
        CHECK(a == b);
    }
}

TEST_CASE("config parsing") {
    VerifyConfig cfg;
    cfg.set("lemma51.trials", "123");
    CHECK(cfg.lemma51_trials == 123);
    cfg.set("thm4.ratio_min", "0.85");
    CHECK(cfg.thm4_ratio_min == 0.85);
    cfg.set("seed", "99");
    CHECK(cfg.seed == 99);
    CHECK_THROWS_AS(cfg.set("nonsense.key", "1"), std::invalid_argument);

    const char* path = "verify_test_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment\nlemma51.trials = 777\nseed=5\n";
    }
    VerifyConfig file_cfg = VerifyConfig::from_file(path);
    CHECK(file_cfg.lemma51_trials == 777);
    CHECK(file_cfg.seed == 5);
    std::remove(path);
}

TEST_CASE("suite serialization shapes") {
    VerifySuite s = run_verify_suite("oddgirth-identity", VerifyConfig{});
    Json j = to_json(s);
    CHECK(j["suite"] == "oddgirth-identity");
    CHECK(j["pass"] == true);
    CHECK(j["cases"].is_array());

    std::string csv = suite_csv(s);
    CHECK(csv.rfind("suite,case,relation,expected,measured,pass\n", 0) == 0);
    CHECK(csv.find("oddgirth-identity") != std::string::npos);
}
