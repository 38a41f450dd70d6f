#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "isogate/claims.hpp"
#include "util.hpp"

using namespace isogate;
using nlohmann::json;
using testutil::kind_of;

TEST_CASE("registry is sorted, unique and backs every criterion") {
    const auto& reg = claim_registry();
    std::set<std::string> ids;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(ids.insert(reg[i].id).second);
        if (i) CHECK(reg[i - 1].id < reg[i].id);
    }
    for (const char* id : {"cartan-lemma", "g3-orbits", "gate-search", "gate-completeness", "exc-family",
                           "cube-cartan", "cm-criterion", "g7-orbits", "g95-s4", "family-j", "exc-2torsion",
                           "surjectivity", "x014-torsion", "x020", "x011", "disc-7", "sqrt-rule", "cm-filter",
                           "disc-17-37", "full2", "disc-identity"})
        CHECK_MESSAGE(ids.count(id) == 1, id);
    const auto& crit = criterion_claims();
    for (int c = 1; c <= 14; ++c) {
        REQUIRE(crit.count(c) == 1);
        for (const auto& id : crit.at(c)) CHECK(ids.count(id) == 1);
    }
}

TEST_CASE("run_claim errors") {
    CHECK(kind_of([] { run_claim("no-such-claim"); }) == ErrorKind::UnknownClaim);
    ClaimConfig cfg;
    cfg.r_list = std::vector<int>{4};
    CHECK(kind_of([&] { run_claim("cartan-lemma", cfg); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("config parsing") {
    const auto cfg = ClaimConfig::from_json(json::parse(
        R"j({"sample_bound": 5000, "height_bound": 50, "torsion_primes": {"X0(14)": [29, 43]}, "r_list": [5, 7]})j"));
    CHECK(cfg.sample_bound == 5000);
    CHECK(cfg.height_bound == 50);
    CHECK(cfg.torsion_primes.at("X0(14)") == std::vector<std::uint32_t>{29, 43});
    CHECK(cfg.r_list == std::vector<int>{5, 7});
    CHECK(kind_of([] { ClaimConfig::from_json(json::parse(R"({"sample_bnd": 1})")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { ClaimConfig::from_json(json::parse(R"({"sample_bound": "x"})")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { ClaimConfig::from_json(json::parse(R"({"sample_bound": 2})")); }) == ErrorKind::RangeExceeded);
    CHECK(kind_of([] { ClaimConfig::from_json(json::parse("[]")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { ClaimConfig::load("/nonexistent/isogate.json"); }) == ErrorKind::InvalidArgument);

    const std::string path = "isogate_test_config.json";
    std::ofstream(path) << R"({"r_list": [11]})";
    CHECK(ClaimConfig::load(path).r_list == std::vector<int>{11});
    std::ofstream(path) << "{not json";
    CHECK(kind_of([&] { ClaimConfig::load(path); }) == ErrorKind::ParseError);
    std::remove(path.c_str());
}

TEST_CASE("r_list override reaches the claim") {
    ClaimConfig cfg;
    cfg.r_list = std::vector<int>{5, 7};
    const auto rep = run_claim("cartan-lemma", cfg);
    CHECK(rep.status == ClaimStatus::pass);
    CHECK(rep.params.at("r") == json({5, 7}));
    CHECK(rep.computed.contains("r=5"));
    CHECK_FALSE(rep.computed.contains("r=11"));
}

TEST_CASE("reports serialize as a schema-tagged JSON array") {
    std::vector<ClaimReport> reps{run_claim("disc-7"), run_claim("sqrt-rule")};
    const auto text = reports_to_json(reps);
    CHECK(text.back() == '\n');
    const auto arr = json::parse(text);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    for (const auto& r : arr) {
        CHECK(r.at("schema") == std::string(kReportSchema));
        for (const char* key : {"claim_id", "params", "status", "expected", "computed", "elapsed_ms"})
            CHECK_MESSAGE(r.contains(key), key);
        CHECK(r.at("status") == "pass");
    }
}

TEST_CASE("property: claims are deterministic apart from timing") {
    for (const char* id : {"disc-7", "full2", "family-j", "cm-filter", "x014-torsion", "disc-identity", "exc-family"}) {
        auto a = run_claim(id).to_json(), b = run_claim(id).to_json();
        a.erase("elapsed_ms");
        b.erase("elapsed_ms");
        CHECK_MESSAGE(a == b, id);
    }
}
