#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <hilb/linalg.hpp>

using namespace hilb;

TEST_CASE("rref is canonical") {
    RatMatrix m{{Rational(2), Rational(4), Rational(6)},
                {Rational(1), Rational(2), Rational(4)}};
    RatMatrix r = rref(m);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == RatRow{1, 2, 0});
    CHECK(r[1] == RatRow{0, 0, 1});
    // Row-equivalent input gives the identical basis.
    RatMatrix m2{{Rational(1), Rational(2), Rational(3)},
                 {Rational(0), Rational(0), Rational(1)},
                 {Rational(3), Rational(6), Rational(10)}};
    CHECK(rref(m2) == r);
}

TEST_CASE("rref with fractions") {
    RatMatrix m{{Rational(1, 2), Rational(1, 3)}, {Rational(3), Rational(2)}};
    RatMatrix r = rref(m);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == RatRow{1, Rational(2, 3)});
}

TEST_CASE("rank and membership") {
    RatMatrix m{{1, 0, 1}, {0, 1, 1}};
    CHECK(rank(m) == 2);
    RatMatrix basis = rref(m);
    CHECK(in_row_space(basis, {2, 3, 5}));
    CHECK(!in_row_space(basis, {0, 0, 1}));
    CHECK(in_row_space(basis, {0, 0, 0}));
    CHECK(!in_row_space({}, {1, 0}));
    CHECK(in_row_space({}, {0, 0}));
}

TEST_CASE("row space intersection") {
    // Two planes in Q^3 meeting in the line spanned by (1,1,1).
    RatMatrix a{{1, 0, 0}, {0, 1, 1}};   // contains (1,1,1)
    RatMatrix b{{1, 1, 0}, {0, 0, 1}};   // contains (1,1,1)
    RatMatrix c = row_space_intersection(a, b);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == RatRow{1, 1, 1});
    CHECK(row_space_intersection(a, {{2, 0, 0}}) == RatMatrix{{RatRow{1, 0, 0}}});
    CHECK(row_space_intersection(a, RatMatrix{}).empty());
}

TEST_CASE("kernel") {
    RatMatrix m{{1, 2, 3}};
    RatMatrix k = kernel(m, 3);
    REQUIRE(k.size() == 2);
    for (const RatRow& v : k)
        CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    CHECK(kernel(RatMatrix{}, 2).size() == 2);
    CHECK(kernel({{1, 0}, {0, 1}}, 2).empty());
}
