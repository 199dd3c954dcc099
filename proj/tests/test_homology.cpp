#include <doctest.h>

#include <random>

#include "eil/families.hpp"
#include "eil/linalg.hpp"
#include "eil/simplicial.hpp"
#include "oracles.hpp"

using namespace eil;

namespace {

SimplicialComplex complex_on(int n, std::vector<std::vector<int>> facets) {
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back("p" + std::to_string(i));
    return SimplicialComplex::from_facets(std::move(verts), std::move(facets));
}

const FieldSpec Q = FieldSpec::rationals();

} // namespace

TEST_CASE("homology conventions") {
    CHECK(reduced_homology_dims(SimplicialComplex::void_complex(), Q).empty());

    SimplicialComplex only_empty = complex_on(0, {});
    CHECK(reduced_homology_dims(only_empty, Q) == std::vector<long>{1});

    SimplicialComplex three_points = complex_on(3, {{0}, {1}, {2}});
    CHECK(reduced_homology_dims(three_points, Q) == std::vector<long>{0, 2});

    SimplicialComplex hollow_triangle = complex_on(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(reduced_homology_dims(hollow_triangle, Q) == std::vector<long>{0, 0, 1});

    SimplicialComplex solid = complex_on(4, {{0, 1, 2, 3}});
    CHECK(reduced_homology_dims(solid, Q) == std::vector<long>{0, 0, 0, 0, 0});
}

TEST_CASE("facet normalization") {
    SimplicialComplex c = complex_on(3, {{0, 1}, {1, 0}, {0}, {2}});
    CHECK(c.facets == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(c.dimension() == 1);
    CHECK_THROWS_AS(complex_on(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("independence complexes") {
    SimpleGraph k3 = parse_graph("vertices: a b c\nedges: a b b c a c");
    SimplicialComplex ik3 = independence_complex(k3);
    CHECK(ik3.facets == std::vector<std::vector<int>>{{0}, {1}, {2}});

    SimpleGraph edgeless = parse_graph("vertices: a b c d\nedges:");
    SimplicialComplex full = independence_complex(edgeless);
    CHECK(full.facets == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    SimpleGraph c5 = family_graph({FamilyKind::cycle, 5});
    SimplicialComplex ic5 = independence_complex(c5);
    CHECK(ic5.facets.size() == 5);
    for (const auto& f : ic5.facets) CHECK(f.size() == 2);
    CHECK(reduced_homology_dims(ic5, Q) == std::vector<long>{0, 0, 1});
}

TEST_CASE("disjoint edges give a circle") {
    SimpleGraph two_edges = parse_graph("vertices: a b c d\nedges: a b c d");
    auto hom = reduced_homology_dims(independence_complex(two_edges), Q);
    CHECK(hom == std::vector<long>{0, 0, 1});
}

TEST_CASE("projective plane distinguishes the fields") {
    std::vector<std::vector<int>> facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5},
                                            {0, 4, 5}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5},
                                            {2, 3, 4}, {2, 3, 5}};
    SimplicialComplex rp2 = complex_on(6, facets);
    CHECK(reduced_homology_dims(rp2, Q) == std::vector<long>{0, 0, 0, 0});
    CHECK(reduced_homology_dims(rp2, FieldSpec::gf(2)) == std::vector<long>{0, 0, 1, 1});
    CHECK(reduced_homology_dims(rp2, FieldSpec::gf(3)) == std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("field validation") {
    SimplicialComplex pt = complex_on(1, {{0}});
    FieldSpec bad;
    bad.kind = FieldSpec::Kind::prime;
    bad.p = 6;
    CHECK_THROWS_AS(reduced_homology_dims(pt, bad), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::gf(9), std::invalid_argument);
    CHECK(!FieldSpec::parse("15").has_value());
    CHECK(FieldSpec::parse("q").has_value());
    CHECK(FieldSpec::parse("7")->name() == "F7");
}

TEST_CASE("rank routines agree with dense rational elimination") {
    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        SparseIntMatrix m;
        m.rows = rows;
        for (int c = 0; c < cols; ++c) {
            std::vector<std::pair<int, long long>> col;
            for (int r = 0; r < rows; ++r) {
                long long v = static_cast<long long>(rng() % 7) - 3;
                if (v != 0) col.emplace_back(r, v);
            }
            m.cols.push_back(std::move(col));
        }
        long expected = oracle::rank_rational_dense(m);
        CHECK(rank_over_field(m, Q) == expected);
        // large prime: same rank as over the rationals for such small entries
        CHECK(rank_over_field(m, FieldSpec::gf(1000003)) == expected);
    }
}

TEST_CASE("rank over GF(p) can drop") {
    // [2] has rank 1 over Q, rank 0 over GF(2)
    SparseIntMatrix m;
    m.rows = 1;
    m.cols.push_back({{0, 2}});
    CHECK(rank_over_field(m, Q) == 1);
    CHECK(rank_over_field(m, FieldSpec::gf(2)) == 0);
}

TEST_CASE("bareiss handles unit-free matrices and big entries") {
    // no +-1 entries anywhere, so the sparse unit phase finds nothing
    std::mt19937_64 rng(313);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 6);
        int cols = 2 + static_cast<int>(rng() % 6);
        SparseIntMatrix m;
        m.rows = rows;
        for (int c = 0; c < cols; ++c) {
            std::vector<std::pair<int, long long>> col;
            for (int r = 0; r < rows; ++r) {
                long long v = 2 * (static_cast<long long>(rng() % 5) - 2);
                if (v != 0) col.emplace_back(r, v * 1000003LL);
            }
            m.cols.push_back(std::move(col));
        }
        CHECK(rank_over_field(m, Q) == oracle::rank_rational_dense(m));
    }

    // rank deficiency among unit-free columns
    SparseIntMatrix dep;
    dep.rows = 3;
    long long big = 3037000499LL; // ~sqrt(2^63)
    dep.cols.push_back({{0, big}, {1, big - 2}, {2, 2}});
    dep.cols.push_back({{0, big - 2}, {1, big}, {2, -2}});
    dep.cols.push_back({{0, 2 * big - 2}, {1, 2 * big - 2}});
    CHECK(rank_over_field(dep, Q) == 2);

    // unit pivots whose elimination overflows 64 bits: the arbitrary-precision
    // retry must kick in and still produce the exact rank
    long long huge = 4000000000LL;
    SparseIntMatrix over;
    over.rows = 3;
    over.cols.push_back({{0, 1}, {1, huge}});
    over.cols.push_back({{0, huge}, {1, -huge}, {2, 2}});
    over.cols.push_back({{0, huge}, {1, huge}, {2, 3}});
    CHECK(rank_over_field(over, Q) == oracle::rank_rational_dense(over));
}
