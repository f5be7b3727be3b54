#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "qdf/report.hpp"

using namespace qdf;

namespace {

const Claim* find_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("claim ids are unique and sorted") {
    std::set<std::string> seen;
    std::string prev;
    for (const auto& c : claim_registry()) {
        CHECK(seen.insert(c.id).second);
        CHECK(prev < c.id);
        prev = c.id;
        CHECK_FALSE(c.paper_location.empty());
        CHECK_FALSE(c.description.empty());
        CHECK(bool(c.body));
    }
    CHECK(claim_registry().size() >= 41);
}

TEST_CASE("required claims are registered") {
    const char* required[] = {
        "ID-BIRATIONAL",
        "SL-S-CHART", "SL-SPECIAL-COMPONENTS", "SL-SPECIAL-DIM", "SL-SPECIAL-CONNECTED",
        "PTS-INCIDENCE-QX", "PTS-INCIDENCE-QY", "PTS-INCIDENCE-QZ",
        "PTS-INCIDENCE-RPM", "PTS-INCIDENCE-NZ", "PTS-INCIDENCE-NY",
        "NF-QX", "NF-NORMAL1", "NF-NORMAL1-RES", "NF-NORMAL2-FACTOR",
        "CHART-CX-UZ-1", "CHART-CX-UZ-2", "CHART-CX-UZ-3", "CHART-CX-UZ-4",
        "CHART-CX-UY-1", "CHART-CX-UY-2", "CHART-CX-UY-3", "CHART-CX-UY-4",
        "CHART-NZ-1", "CHART-NZ-2", "CHART-NZ-3", "CHART-NZ-4", "CHART-NZ-5",
        "CHART-RZ-1", "CHART-RZ-2", "CHART-RZ-3", "CHART-RZ-4",
        "CHART-RX-DERIVED",
        "QB-MATRIX", "QB-DET-FORM", "QB-DEGREE-8",
        "QB-TANGENCY-IDENT", "QB-TANGENCY-1632",
        "PARAM-53", "PARAM-34", "RESOLUTION-PIPELINE",
    };
    for (const char* id : required) {
        INFO(id);
        CHECK(find_claim(id) != nullptr);
    }
    const Claim* t = find_claim("QB-TANGENCY-1632");
    REQUIRE(t != nullptr);
    CHECK(t->description.find("32") != std::string::npos);
    CHECK(t->description.find("16") != std::string::npos);
}

TEST_CASE("every in-scope topic area is covered by a claim") {
    // static coverage table: source-location tag -> claim pattern
    const std::pair<const char*, const char*> coverage[] = {
        {"eq(1)/eq(2) model identity", "ID-BIRATIONAL"},
        {"S2 parameter counts", "PARAM-*"},
        {"eq(4) matrix shape", "QB-MATRIX"},
        {"S2 degeneracy divisor", "QB-D*"},
        {"S2 tangency", "QB-TANGENCY-*"},
        {"eq(5)/S3.1 singular locus", "SL-*"},
        {"S3.1 incidence points", "PTS-INCIDENCE-*"},
        {"S3.2 normal forms", "NF-*"},
        {"S3.3 chart computations", "CHART-*"},
        {"S3.4 resolution summary", "RESOLUTION-PIPELINE"},
    };
    for (const auto& [topic, pattern] : coverage) {
        INFO(topic << " via " << pattern);
        int hits = 0;
        for (const auto& c : claim_registry())
            if (glob_match(pattern, c.id)) ++hits;
        CHECK(hits >= 1);
    }
}

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "ANYTHING"));
    CHECK(glob_match("CHART-*", "CHART-NZ-4"));
    CHECK_FALSE(glob_match("CHART-*", "QB-MATRIX"));
    CHECK(glob_match("PTS-*-NZ", "PTS-INCIDENCE-NZ"));
    CHECK(glob_match("A*B*C", "AxxBxxC"));
    CHECK_FALSE(glob_match("A*B*C", "AxxBxx"));
    CHECK(glob_match("EXACT", "EXACT"));
    CHECK_FALSE(glob_match("EXACT", "EXACTLY"));
    CHECK(glob_match("", ""));
}

TEST_CASE("per-claim random streams are deterministic and separated") {
    CHECK(claim_stream_seed(7, "QB-TANGENCY-1632") == claim_stream_seed(7, "QB-TANGENCY-1632"));
    CHECK(claim_stream_seed(7, "QB-TANGENCY-1632") != claim_stream_seed(8, "QB-TANGENCY-1632"));
    CHECK(claim_stream_seed(7, "QB-MATRIX") != claim_stream_seed(7, "QB-DET-FORM"));
}

TEST_CASE("run_claims: selection, totals, exit codes") {
    RunConfig cfg;
    cfg.workers = 2;
    Report r = run_claims({"PARAM-*"}, cfg);
    CHECK(r.results.size() == 2);
    CHECK(r.passed == 2);
    CHECK(r.failed == 0);
    CHECK(r.limited == 0);
    CHECK(report_exit_code(r) == 0);
    CHECK_THROWS_AS((void)run_claims({"NO-SUCH-CLAIM-*"}, cfg), Error);
}

TEST_CASE("a starved claim reports limited, never pass") {
    RunConfig cfg;
    cfg.workers = 1;
    cfg.budgets.max_pairs = 3;
    Report r = run_claims({"CHART-CX-UZ-1"}, cfg);
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].status == Status::Limited);
    CHECK(r.limited == 1);
    CHECK(report_exit_code(r) == 2);
}

TEST_CASE("structured output is byte-stable and carries witnesses") {
    RunConfig cfg;
    cfg.workers = 2;
    Report a = run_claims({"QB-*"}, cfg);
    Report b = run_claims({"QB-*"}, cfg);
    CHECK(emit_structured(a) == emit_structured(b));
    CHECK(emit_structured(a).find("\"passed\"") != std::string::npos);

    // witness plumbing on a synthetic failure
    Report fake;
    fake.field = "auto";
    fake.order = "grevlex";
    fake.results.push_back({"X-FAKE", "S0", "synthetic", Status::Fail,
                            "offending generator g", "QQ", 12});
    fake.failed = 1;
    std::string s = emit_structured(fake);
    CHECK(s.find("offending generator g") != std::string::npos);
    CHECK(s.find("\"ms\": 0") != std::string::npos);   // zeroed by default
    CHECK(emit_structured(fake, true).find("\"ms\": 12") != std::string::npos);
    CHECK(report_exit_code(fake) == 1);
    std::string text = emit_text(fake);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("X-FAKE") != std::string::npos);
}

TEST_CASE("field override is reflected in claim results") {
    RunConfig cfg;
    cfg.workers = 1;
    cfg.field_sel = RunConfig::FieldSel::Fp;
    cfg.prime = 10009;  // 10009 = 1 mod 4, so i lives in the prime field
    Report r = run_claims({"PTS-INCIDENCE-RPM"}, cfg);
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].status == Status::Pass);
    CHECK(r.results[0].field_used.find("10009") != std::string::npos);
}
