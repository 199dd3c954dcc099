#include <doctest.h>

#include "eil/families.hpp"
#include "eil/graph.hpp"
#include "eil/hilbert.hpp"
#include "eil/polynomial.hpp"

using namespace eil;

TEST_CASE("family specs parse") {
    auto p = FamilySpec::parse("path:7");
    REQUIRE(p.has_value());
    CHECK(p->kind == FamilyKind::path);
    CHECK(p->param == 7);
    CHECK(p->to_string() == "path:7");

    CHECK(FamilySpec::parse("gs:3")->kind == FamilyKind::g_s);
    CHECK(FamilySpec::parse("startriangle:2")->kind == FamilyKind::star_triangle);
    CHECK(!FamilySpec::parse("path").has_value());
    CHECK(!FamilySpec::parse("path:x").has_value());
    CHECK(!FamilySpec::parse("blob:3").has_value());
}

TEST_CASE("family graphs") {
    SimpleGraph p2 = family_graph({FamilyKind::path, 2});
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edge_count() == 1);

    CHECK(canonical_key(family_graph({FamilyKind::cycle, 3})) ==
          canonical_key(family_graph({FamilyKind::star_triangle, 1})));

    SimpleGraph g1 = family_graph({FamilyKind::g_s, 1});
    CHECK(g1.vertex_count() == 5);
    CHECK(g1.edge_count() == 4);
    // x4 carries the star over x1 and sits inside the path x2-x3-x4-x5
    CHECK(g1.adjacent(g1.index_of("x4"), g1.index_of("x1")));
    CHECK(g1.adjacent(g1.index_of("x2"), g1.index_of("x3")));
    CHECK(g1.adjacent(g1.index_of("x3"), g1.index_of("x4")));
    CHECK(g1.adjacent(g1.index_of("x4"), g1.index_of("x5")));

    SimpleGraph gs3 = family_graph({FamilyKind::g_s, 3});
    CHECK(gs3.degree(gs3.index_of("x6")) == 5); // s + 2

    CHECK_THROWS_AS(family_graph({FamilyKind::path, 1}), std::invalid_argument);
    CHECK_THROWS_AS(family_graph({FamilyKind::cycle, 2}), std::invalid_argument);
    CHECK_THROWS_AS(family_graph({FamilyKind::star, 0}), std::invalid_argument);
}

TEST_CASE("family predictions") {
    FamilyPrediction p7 = family_prediction({FamilyKind::path, 7});
    CHECK(p7.depth == 3);
    CHECK(p7.reg == 2);
    CHECK(p7.dim == 4);
    CHECK(p7.deg_h == 3);
    CHECK(p7.star_equality == true);

    FamilyPrediction c5 = family_prediction({FamilyKind::cycle, 5});
    CHECK(c5.depth == 2);
    CHECK(c5.reg == 2);
    CHECK(c5.dim == 2);
    CHECK(c5.deg_h == 2);

    FamilyPrediction c6 = family_prediction({FamilyKind::cycle, 6});
    CHECK(!c6.deg_h.has_value()); // no closed form when n is divisible by 3
    CHECK(c6.reg == 2);
    CHECK(c6.depth == 2);

    FamilyPrediction st4 = family_prediction({FamilyKind::star_triangle, 4});
    CHECK(st4.dim == 4);
    CHECK(st4.deg_h == 3);
    CHECK(!st4.star_equality.has_value());

    FamilyPrediction gs3 = family_prediction({FamilyKind::g_s, 3});
    CHECK(gs3.reg == 1);
    CHECK(gs3.projdim == 5);
    CHECK(gs3.depth == 2);
    CHECK(gs3.dim == 5);
    CHECK(!gs3.deg_h.has_value());
    CHECK(gs3.deg_h_strictly_below_dim);

    nlohmann::json j = gs3.to_json();
    CHECK(j["deg_h"] == "not predicted");
    CHECK(j["dim"] == 5);
}

TEST_CASE("cycle h-polynomial splits over the two shorter paths") {
    // h(C_n) = h(P_{n-1}) + x * h(P_{n-3}) over the pole ceil((n-1)/2)
    for (int n = 5; n <= 12; ++n) {
        IntPolynomial hc = h_polynomial(family_graph({FamilyKind::cycle, n}));
        IntPolynomial hp1 = h_polynomial(family_graph({FamilyKind::path, n - 1}));
        IntPolynomial hp3 = h_polynomial(family_graph({FamilyKind::path, n - 3}));
        CHECK(hc == hp1 + hp3.shifted(1));
    }
}

TEST_CASE("path h degree identity") {
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    for (int n = 2; n <= 12; ++n) {
        IntPolynomial h = h_polynomial(family_graph({FamilyKind::path, n}));
        CHECK(*h.degree() == ceil_div(n - 1, 3) + ceil_div(n, 2) - ceil_div(n, 3));
    }
}
