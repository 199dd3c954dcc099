#include <doctest.h>

#include <random>

#include "eil/cameron_walker.hpp"
#include "eil/families.hpp"
#include "eil/graph.hpp"
#include "eil/invariants.hpp"
#include "oracles.hpp"

using namespace eil;

namespace {

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

TEST_CASE("matching number") {
    SimpleGraph edgeless = parse_graph("vertices: a b c\nedges:");
    auto m0 = matching_number(edgeless);
    CHECK(m0.value == 0);
    CHECK(m0.witness.empty());

    CHECK(matching_number(family_graph({FamilyKind::cycle, 5})).value == 2);
    CHECK(matching_number(family_graph({FamilyKind::star, 5})).value == 1);

    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        SimpleGraph g = random_graph(4 + static_cast<int>(rng() % 5), 0.45, rng);
        CHECK(matching_number(g).value == oracle::matching_brute(g));
    }
}

TEST_CASE("matching witness is a lex-least maximum matching") {
    SimpleGraph p5 = family_graph({FamilyKind::path, 5});
    auto m = matching_number(p5);
    CHECK(m.value == 2);
    CHECK(m.witness == std::vector<std::pair<std::string, std::string>>{{"x1", "x2"}, {"x3", "x4"}});
}

TEST_CASE("induced matching number") {
    CHECK(induced_matching_number(family_graph({FamilyKind::cycle, 5})).value == 1);
    SimpleGraph two_edges = parse_graph("vertices: a b c d\nedges: a b c d");
    CHECK(induced_matching_number(two_edges).value == 2);

    // a Cameron-Walker shape: im = sum t_j + m
    CWStructure spec;
    spec.m = 2;
    spec.n = 2;
    spec.s = {1, 2};
    spec.t = {1, 2};
    spec.bip = {{1, 1}, {1, 2}, {2, 2}};
    CHECK(induced_matching_number(build_cw(spec)).value == spec.sum_t() + spec.m);

    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 25; ++trial) {
        SimpleGraph g = random_graph(4 + static_cast<int>(rng() % 4), 0.4, rng);
        CHECK(induced_matching_number(g).value == oracle::induced_matching_brute(g));
    }
}

TEST_CASE("independence number") {
    for (int n = 2; n <= 9; ++n)
        CHECK(independence_number(family_graph({FamilyKind::path, n})).value == (n + 1) / 2);
    for (int n = 3; n <= 9; ++n)
        CHECK(independence_number(family_graph({FamilyKind::cycle, n})).value == n / 2);
    CHECK(independence_number(family_graph({FamilyKind::star_triangle, 1})).value == 1);

    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        SimpleGraph g = random_graph(4 + static_cast<int>(rng() % 6), 0.35, rng);
        CHECK(independence_number(g).value == oracle::independence_brute(g));
    }
}

TEST_CASE("independence monotone under induced subgraphs") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 20; ++trial) {
        SimpleGraph g = random_graph(8, 0.35, rng);
        std::uint64_t mask = rng() & g.full_mask();
        CHECK(independence_number(g.induced_by_mask(mask)).value <=
              independence_number(g).value);
    }
}

TEST_CASE("independence domination") {
    SimpleGraph star = family_graph({FamilyKind::star, 3});
    auto idom = independence_domination(star);
    CHECK(idom.value == 1);
    CHECK(idom.witness == std::vector<std::string>{"xv"});

    // leaf + pendant triangle, one core edge each side
    CWStructure spec;
    spec.m = 1;
    spec.n = 1;
    spec.s = {2};
    spec.t = {1};
    spec.bip = {{1, 1}};
    CHECK(independence_domination(build_cw(spec)).value == 2);

    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 25; ++trial) {
        SimpleGraph g = random_graph(4 + static_cast<int>(rng() % 5), 0.35, rng);
        CHECK(independence_domination(g).value == oracle::idom_brute(g));
    }
}

TEST_CASE("independence domination on the 24-vertex reference graph") {
    CWStructure spec;
    spec.m = 3;
    spec.n = 4;
    spec.s = {3, 1, 3};
    spec.t = {0, 1, 2, 2};
    spec.bip = {{1, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 4}};
    SimpleGraph g = build_cw(spec);
    CHECK(g.vertex_count() == 24);
    int idom = independence_domination(g).value;
    CHECK(idom >= 6); // m + #{j : t_j > 0}
    CHECK(idom <= 8); // min(sum s + n, sum t + m)
}

TEST_CASE("im <= m always") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 40; ++trial) {
        SimpleGraph g = random_graph(4 + static_cast<int>(rng() % 6), 0.4, rng);
        CHECK(induced_matching_number(g).value <= matching_number(g).value);
    }
}

TEST_CASE("witnesses satisfy their predicates") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 20; ++trial) {
        SimpleGraph g = random_graph(7, 0.4, rng);

        auto ind = independence_number(g);
        CHECK(static_cast<int>(ind.witness.size()) == ind.value);
        for (std::size_t a = 0; a < ind.witness.size(); ++a)
            for (std::size_t b = a + 1; b < ind.witness.size(); ++b)
                CHECK(!g.adjacent(g.index_of(ind.witness[a]), g.index_of(ind.witness[b])));

        auto m = matching_number(g);
        CHECK(static_cast<int>(m.witness.size()) == m.value);

        auto idom = independence_domination(g);
        std::uint64_t covered = 0;
        for (const auto& label : idom.witness) {
            int v = g.index_of(label);
            covered |= g.neighbors_mask(v) | (1ull << v);
        }
        CHECK(covered == g.full_mask());
    }
}
