#include <doctest.h>

#include <random>

#include "eil/betti.hpp"
#include "eil/cameron_walker.hpp"
#include "eil/errors.hpp"
#include "eil/families.hpp"
#include "eil/hilbert.hpp"
#include "oracles.hpp"

using namespace eil;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0, 1);
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back("g" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng) < p) e.emplace_back(v[static_cast<std::size_t>(a)],
                                              v[static_cast<std::size_t>(b)]);
    return SimpleGraph(v, e);
}

} // namespace

TEST_CASE("small Betti tables") {
    SimpleGraph edge = parse_graph("vertices: a b\nedges: a b");
    BettiTable t = betti_table(edge, Q, 18);
    CHECK(t.beta(0, 0) == 1);
    CHECK(t.beta(1, 2) == 1);
    CHECK(t.entries.size() == 2);

    SimpleGraph k3 = parse_graph("vertices: a b c\nedges: a b b c a c");
    t = betti_table(k3, Q, 18);
    CHECK(t.beta(1, 2) == 3);
    CHECK(t.beta(2, 3) == 2);
    CHECK(t.projdim() == 2);
    CHECK(t.regularity() == 1);

    SimpleGraph p3 = family_graph({FamilyKind::path, 3});
    t = betti_table(p3, Q, 18);
    CHECK(t.beta(1, 2) == 2);
    CHECK(t.beta(2, 3) == 1);
    CHECK(t.projdim() == 2);
    // depth 3 - 2 = 1 = ceil(3/3)
}

TEST_CASE("betti equals the unpruned per-subset computation") {
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 12; ++trial) {
        SimpleGraph g = random_graph(3 + static_cast<int>(rng() % 4), 0.45, rng);
        for (FieldSpec f : {Q, FieldSpec::gf(2)}) {
            BettiTable t = betti_table(g, f, 18);
            auto brute = oracle::betti_brute(g, f);
            CHECK(t.entries == brute);
        }
    }
}

TEST_CASE("alternating sum gives the k-polynomial numerator") {
    std::mt19937_64 rng(409);
    for (int trial = 0; trial < 15; ++trial) {
        SimpleGraph g = random_graph(4 + static_cast<int>(rng() % 4), 0.4, rng);
        BettiTable t = betti_table(g, Q, 18);
        CHECK(betti_alternating_sum(t) == k_polynomial(g).numerator);
    }
}

TEST_CASE("cutoff refusal") {
    SimpleGraph p19 = family_graph({FamilyKind::path, 19});
    CHECK_THROWS_AS(betti_table(p19, Q, 18), cutoff_error);
    BettiTable t = betti_table(p19, Q, 19); // explicit raise works
    CHECK(t.projdim() == 19 - (19 + 2) / 3);
}

TEST_CASE("homological reports") {
    HomologicalReport c3 = homological_report(family_graph({FamilyKind::cycle, 3}), Q, 18);
    CHECK(c3.projdim == 2);
    CHECK(c3.depth == 1);
    CHECK(c3.reg == 1);
    CHECK(c3.dim == 1);
    CHECK(c3.deg_h == 1);
    CHECK(c3.star_equality);

    HomologicalReport p4 = homological_report(family_graph({FamilyKind::path, 4}), Q, 18);
    CHECK(p4.projdim == 2);
    CHECK(p4.depth == 2);
    CHECK(p4.reg == 1);
    CHECK(p4.dim == 2);
    CHECK(p4.deg_h == 1);
    CHECK(p4.star_equality);
    CHECK(p4.extremal == std::vector<std::pair<int, int>>{{2, 3}});

    // pendant triangle of weight two: the equality fails
    CWStructure spec;
    spec.m = 1;
    spec.n = 1;
    spec.s = {1};
    spec.t = {2};
    spec.bip = {{1, 1}};
    HomologicalReport bad = homological_report(build_cw(spec), Q, 18);
    CHECK(bad.deg_h == 3);
    CHECK(bad.reg == 3);
    CHECK(bad.dim == 3);
    CHECK(bad.depth == 2);
    CHECK(!bad.star_equality);
    CHECK(bad.extremal.size() > 1);
}

TEST_CASE("edgeless graphs") {
    SimpleGraph edgeless = parse_graph("vertices: a b c\nedges:");
    BettiTable t = betti_table(edgeless, Q, 18);
    CHECK(t.entries.size() == 1);
    CHECK(t.beta(0, 0) == 1);
    HomologicalReport rep = homological_report(edgeless, Q, 18);
    CHECK(rep.projdim == 0);
    CHECK(rep.depth == 3);
    CHECK(rep.star_equality);
}

TEST_CASE("im <= reg <= m") {
    std::mt19937_64 rng(419);
    for (int trial = 0; trial < 20; ++trial) {
        SimpleGraph g = random_graph(4 + static_cast<int>(rng() % 5), 0.35, rng);
        if (g.edge_count() == 0) continue;
        BettiTable t = betti_table(g, Q, 18);
        CHECK(oracle::induced_matching_brute(g) <= t.regularity());
        CHECK(t.regularity() <= oracle::matching_brute(g));
    }
}

TEST_CASE("star packing witnesses") {
    SimpleGraph p3 = family_graph({FamilyKind::path, 3});
    auto w = betti_nonvanishing_witness(p3, 2, 1);
    REQUIRE(w.has_value());
    CHECK(w->stars.size() == 1);
    CHECK(w->stars[0].center == "x2");
    CHECK(w->stars[0].leaves.size() == 2);

    SimpleGraph gs = family_graph({FamilyKind::g_s, 2});
    auto full = betti_nonvanishing_witness(gs, 4, 1); // the whole star at x5
    REQUIRE(full.has_value());
    CHECK(full->stars[0].center == "x5");

    // p6 with i = 4, ell = 2: two stars over consecutive triples
    SimpleGraph p6 = family_graph({FamilyKind::path, 6});
    auto two = betti_nonvanishing_witness(p6, 4, 2);
    REQUIRE(two.has_value());
    CHECK(two->stars.size() == 2);

    CHECK(!betti_nonvanishing_witness(p3, 3, 1).has_value());
    CHECK(!betti_nonvanishing_witness(p3, 1, 2).has_value());
}

TEST_CASE("witnesses imply nonvanishing entries") {
    std::mt19937_64 rng(421);
    FieldSpec f2 = FieldSpec::gf(2);
    for (int trial = 0; trial < 10; ++trial) {
        SimpleGraph g = random_graph(6, 0.35, rng);
        if (g.edge_count() == 0) continue;
        BettiTable tq = betti_table(g, Q, 18);
        BettiTable t2 = betti_table(g, f2, 18);
        for (int ell = 1; ell <= 3; ++ell)
            for (int i = ell; i <= 6; ++i)
                if (betti_nonvanishing_witness(g, i, ell)) {
                    CHECK(tq.beta(i, i + ell) != 0);
                    CHECK(t2.beta(i, i + ell) != 0);
                }
    }
}

TEST_CASE("betti json and rendering") {
    SimpleGraph k3 = parse_graph("vertices: a b c\nedges: a b b c a c");
    BettiTable t = betti_table(k3, Q, 18);
    nlohmann::json j = t.to_json();
    CHECK(j["field"] == "Q");
    CHECK(j["entries"] == nlohmann::json::array({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
    std::string rendered = t.render_table();
    CHECK(rendered.find("total:") != std::string::npos);
}

TEST_CASE("cutoff env override") {
    setenv("EIL_CUTOFF", "5", 1);
    CHECK(default_betti_cutoff() == 5);
    setenv("EIL_CUTOFF", "junk", 1);
    CHECK(default_betti_cutoff() == 18);
    unsetenv("EIL_CUTOFF");
    CHECK(default_betti_cutoff() == 18);
}
