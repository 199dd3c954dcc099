#include <doctest.h>

#include <algorithm>

#include "eil/errors.hpp"
#include "eil/verify.hpp"

using namespace eil;

TEST_CASE("range config parsing") {
    RangeMap ranges = parse_range_config("# comment\n s_max = 5 \n\nd_max=3\n");
    CHECK(ranges.at("s_max") == "5");
    CHECK(ranges.at("d_max") == "3");
    CHECK_THROWS_AS(parse_range_config("novalue\n"), parse_error);
}

TEST_CASE("claim registry") {
    auto claims = known_claims();
    CHECK(claims.size() == 14);
    for (const char* id : {"thm-1.1", "prop-1.3", "lem-1.6", "lem-1.7", "lem-2.1", "thm-2.2",
                           "cor-2.4", "cor-2.6", "prop-2.8", "cor-2.9", "prop-2.11", "thm-3.1",
                           "thm-3.4", "lem-2.10-forest"})
        CHECK(std::find(claims.begin(), claims.end(), id) != claims.end());
    CHECK_THROWS_AS(run_verify("nope", {}, FieldSpec::rationals(), 1), std::invalid_argument);
}

TEST_CASE("small verify runs pass") {
    RangeMap small{{"s_max", "3"}, {"t_max", "3"}};
    VerificationReport star = run_verify("lem-1.6", small, FieldSpec::rationals(), 1);
    CHECK(star.all_pass);
    CHECK(star.instance_count == 3);
    CHECK(star.claim == "lem-1.6");

    nlohmann::json j = star.to_json();
    CHECK(j["all_pass"] == true);
    CHECK(j["instances"].size() == 3);
    CHECK(j.contains("wall_ms"));

    VerificationReport triangle = run_verify("lem-1.7", small, FieldSpec::rationals(), 1);
    CHECK(triangle.all_pass);
}

TEST_CASE("jobs produce identical reports") {
    RangeMap ranges{{"m_max", "2"}, {"n_max", "1"}, {"s_max", "2"},
                    {"t_max", "2"}, {"max_vertices", "10"}};
    VerificationReport seq = run_verify("thm-1.1", ranges, FieldSpec::rationals(), 1);
    VerificationReport par = run_verify("thm-1.1", ranges, FieldSpec::rationals(), 4);
    CHECK(seq.all_pass);
    nlohmann::json a = seq.to_json();
    nlohmann::json b = par.to_json();
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a == b);
}

TEST_CASE("csv rows") {
    RangeMap small{{"s_max", "2"}};
    VerificationReport rep = run_verify("lem-1.6", small, FieldSpec::rationals(), 1);
    std::string csv = rep.to_csv();
    CHECK(csv.find("instance,pass") == 0);
    CHECK(csv.find("star:1,1") != std::string::npos);
}

TEST_CASE("parallel jobs agree on homology-heavy claims") {
    RangeMap ranges{{"d_max", "4"}};
    VerificationReport seq = run_verify("thm-3.4", ranges, FieldSpec::rationals(), 1);
    VerificationReport par = run_verify("thm-3.4", ranges, FieldSpec::rationals(), 3);
    CHECK(seq.all_pass);
    nlohmann::json a = seq.to_json();
    nlohmann::json b = par.to_json();
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a == b);
}

TEST_CASE("reports are deterministic across repeat runs") {
    RangeMap ranges{{"s_max", "6"}};
    nlohmann::json a = run_verify("lem-1.6", ranges, FieldSpec::rationals(), 1).to_json();
    nlohmann::json b = run_verify("lem-1.6", ranges, FieldSpec::rationals(), 1).to_json();
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("cutoff errors surface from verify runs") {
    // graphs above the requested cutoff must refuse, not silently shrink
    RangeMap ranges{{"max_vertices", "11"}, {"cutoff", "8"},
                    {"m_max", "1"}, {"n_max", "1"}, {"s_max", "3"}, {"t_max", "3"}};
    CHECK_THROWS_AS(run_verify("thm-2.2", ranges, FieldSpec::rationals(), 1), cutoff_error);
    CHECK_THROWS_AS(run_verify("thm-2.2", ranges, FieldSpec::rationals(), 2), cutoff_error);
}
