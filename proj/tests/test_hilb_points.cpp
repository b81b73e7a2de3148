#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <hilb/hilb_points.hpp>

using namespace hilb;

TEST_CASE("fixed point counts on p2") {
    ToricSurface s = ToricSurface::p2();
    CHECK(enumerate_fixed_points(s, 0).size() == 1);
    CHECK(enumerate_fixed_points(s, 1).size() == 3);
    CHECK(enumerate_fixed_points(s, 2).size() == 9);
    CHECK(enumerate_fixed_points(s, 3).size() == 22);
    for (const HilbFixedPoint& p : enumerate_fixed_points(s, 3))
        CHECK(p.total() == 3);
}

TEST_CASE("labels") {
    ToricSurface s = ToricSurface::p2();
    auto pts = enumerate_fixed_points(s, 0);
    CHECK(pts[0].label() == "()");
    HilbFixedPoint p;
    p.parts[0] = Staircase({1});
    p.parts[2] = Staircase({2, 1});
    CHECK(p.label() == "p1:[1];p3:[2,1]");
}

TEST_CASE("tangent representation has dimension 2d") {
    ToricSurface s = ToricSurface::p1xp1();
    for (int64_t d = 1; d <= 3; ++d)
        for (const HilbFixedPoint& p : enumerate_fixed_points(s, d))
            CHECK(tangent_representation(s, p).weights.size() == size_t(2 * d));
}

TEST_CASE("tangent oracle agrees with cleft couples") {
    std::vector<std::pair<Character, Character>> charts{
        {{1, 0}, {0, 1}}, {{-1, 1}, {-1, 0}}, {{0, -1}, {1, -1}}};
    for (int64_t n = 1; n <= 8; ++n)
        for (const Staircase& e : enumerate_staircases(n))
            for (const auto& [cx, cy] : charts) {
                auto a = tangent_characters(e, cx, cy);
                auto b = tangent_oracle(e, cx, cy);
                CHECK(a == b);
            }
}

TEST_CASE("euler class") {
    ToricSurface s = ToricSurface::p2();
    HilbFixedPoint p;
    p.parts[2] = Staircase({1});
    Polynomial e = euler_class(tangent_representation(s, p));
    // Tangent weights at the reduced point in the (t1,t2) chart: -t1, -t2.
    CHECK(e == Polynomial::monomial(1, 1));
    CHECK(euler_class(TangentRep{}) == Polynomial(1));
}

TEST_CASE("localized integral of 1 vanishes") {
    for (const char* name : {"p2", "p1xp1"}) {
        ToricSurface s = ToricSurface::preset(name);
        for (int64_t d = 1; d <= 2; ++d) {
            auto pts = enumerate_fixed_points(s, d);
            std::vector<Polynomial> eu;
            for (const HilbFixedPoint& p : pts)
                eu.push_back(euler_class(tangent_representation(s, p)));
            // sum_p prod_{q != p} e_q == 0  (equivariant integral of 1).
            Polynomial total;
            for (size_t p = 0; p < pts.size(); ++p) {
                Polynomial prod(1);
                for (size_t q = 0; q < pts.size(); ++q)
                    if (q != p) prod *= eu[q];
                total += prod;
            }
            CHECK(total.is_zero());
        }
    }
}

TEST_CASE("betti numbers via Bialynicki-Birula") {
    ToricSurface p2 = ToricSurface::p2();
    Character lambda{1, 4};
    CHECK(betti_bb(p2, 1, lambda) == std::vector<size_t>{1, 0, 1, 0, 1});
    CHECK(betti_bb(p2, 2, lambda) == std::vector<size_t>{1, 0, 2, 0, 3, 0, 2, 0, 1});
    CHECK(betti_bb(p2, 3, lambda) ==
          std::vector<size_t>{1, 0, 2, 0, 5, 0, 6, 0, 5, 0, 2, 0, 1});
    CHECK_THROWS(betti_bb(p2, 1, Character{1, 1}));
    // (1,2) kills the weight (2,-1) at the length-3 curvilinear scheme.
    CHECK_THROWS(betti_bb(p2, 3, Character{1, 2}));

    ToricSurface q = ToricSurface::p1xp1();
    Character mu{1, 3};
    CHECK(betti_bb(q, 1, mu) == std::vector<size_t>{1, 0, 2, 0, 1});
    CHECK(betti_bb(q, 2, mu) == std::vector<size_t>{1, 0, 3, 0, 6, 0, 3, 0, 1});
}
