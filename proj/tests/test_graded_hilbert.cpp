#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <hilb/graded_hilbert.hpp>

using namespace hilb;

namespace {
const Character CX{1, 0}, CY{0, 1};
const Polynomial T1 = Polynomial::monomial(1, 0);
const Polynomial T2 = Polynomial::monomial(0, 1);

GradedVector gv(int64_t deg, std::map<size_t, Polynomial> e) {
    return GradedVector::make(deg, std::move(e));
}
}  // namespace

TEST_CASE("ambient dimensions") {
    CHECK(weighted_ambient_dim(1, 1, 3) == 4);
    CHECK(weighted_ambient_dim(1, 2, 2) == 2);
    CHECK(weighted_ambient_dim(2, 3, 1) == 0);
    CHECK(weighted_ambient_dim(2, 3, 12) == 3);
    CHECK_THROWS(weighted_ambient_dim(0, 1, 1));
}

TEST_CASE("model for weights (1,1), H=(1,1)") {
    GradedHilbModel m = GradedHilbModel::build(1, 1, {{0, 1}, {1, 1}});
    REQUIRE(m.fixed_points.size() == 2);
    CHECK(m.fixed_points[0] == Staircase({1, 1}));
    CHECK(m.fixed_points[1] == Staircase({2}));
    CHECK(m.embedding_degrees == std::vector<int64_t>{1});

    CHECK(quotient_characters(m, m.fixed_points[0], 1, CX, CY) ==
          std::vector<Character>{{1, 0}});
    CHECK(quotient_characters(m, m.fixed_points[1], 1, CX, CY) ==
          std::vector<Character>{{0, 1}});
    CHECK_THROWS(quotient_characters(m, m.fixed_points[0], 0, CX, CY));

    GradedVector c1 = chern_generator(m, 1, 1, CX, CY);
    CHECK(c1.degree == 1);
    CHECK(c1.entry(0) == T1);
    CHECK(c1.entry(1) == T2);
    CHECK(chern_generator(m, 1, 0, CX, CY).entry(1) == Polynomial(1));
    CHECK_THROWS(chern_generator(m, 1, 2, CX, CY));
}

TEST_CASE("specialized chart gives the (t,0)+(1,1) module") {
    GradedHilbModel m = GradedHilbModel::build(1, 1, {{0, 1}, {1, 1}});
    Character cy_degenerate{0, 0};
    GradedVector c1 = chern_generator(m, 1, 1, CX, cy_degenerate);
    CHECK(c1.entry(0) == T1);
    CHECK(c1.entry(1).is_zero());

    GradedSubmodule mod = module_M(m, CX, cy_degenerate, 4);
    // (P,Q) in M iff P - Q is divisible by t1, degreewise up to 4.
    CHECK(piece_membership(gv(1, {{0, T1}}), mod));
    CHECK(piece_membership(gv(1, {{0, T2}, {1, T2}}), mod));
    CHECK(piece_membership(gv(2, {{0, T1 * T2}}), mod));
    CHECK(!piece_membership(gv(1, {{1, T2}}), mod));
    CHECK(!piece_membership(gv(2, {{0, T2 * T2}}), mod));
    CHECK(piece_membership(gv(2, {{0, T2 * T2 + T1 * T1}, {1, T2 * T2}}), mod));
    for (int64_t k = 0; k <= 4; ++k) CHECK(mod.piece_dim(k) == size_t(2 * k + 1));
}

TEST_CASE("H=(1,1,1) is the GKM module of a P1") {
    GradedHilbModel m = GradedHilbModel::build(1, 1, {{0, 1}, {1, 1}, {2, 1}});
    REQUIRE(m.fixed_points.size() == 2);
    CHECK(m.fixed_points[0] == Staircase({1, 1, 1}));
    CHECK(m.fixed_points[1] == Staircase({3}));
    CHECK(m.embedding_degrees == std::vector<int64_t>{1, 2});

    GradedSubmodule mod = module_M(m, CX, CY, 4);
    GradedSubmodule p1 = generate_module(
        {gv(0, {{0, Polynomial(1)}, {1, Polynomial(1)}}), gv(1, {{0, T1 - T2}})}, 2, 4);
    CHECK(piece_equal(mod, p1));
    CHECK(quotient_betti(mod) == std::vector<size_t>{1, 1, 0, 0, 0});
}

TEST_CASE("weights (1,2): the 2t1-t2 congruence module") {
    GradedHilbModel m = GradedHilbModel::build(1, 2, {{0, 1}, {1, 1}, {2, 1}});
    REQUIRE(m.fixed_points.size() == 2);
    CHECK(m.fixed_points[0] == Staircase({1, 1, 1}));
    CHECK(m.fixed_points[1] == Staircase({2, 1}));
    CHECK(m.embedding_degrees == std::vector<int64_t>{2});

    GradedSubmodule mod = module_M(m, CX, CY, 4);
    // Entries of the degree-2 generator: 2t1 at {1,x,x^2}, t2 at {1,x,y}.
    CHECK(piece_membership(gv(1, {{0, T1 * 2}, {1, T2}}), mod));
    CHECK(!piece_membership(gv(1, {{0, T1}}), mod));
    GradedSubmodule gkm = generate_module(
        {gv(0, {{0, Polynomial(1)}, {1, Polynomial(1)}}), gv(1, {{0, T1 * 2 - T2}})}, 2, 4);
    CHECK(piece_equal(mod, gkm));
}

TEST_CASE("single fixed point gives the free rank-one module") {
    GradedHilbModel m = GradedHilbModel::build(1, 1, {{0, 1}, {1, 2}});  // E = {1,x,y}
    REQUIRE(m.fixed_points.size() == 1);
    CHECK(m.embedding_degrees.empty());  // H_1 = 2 = dim k[x,y]_1: trivial Grassmannian
    GradedSubmodule mod = module_M(m, CX, CY, 3);
    CHECK(piece_equal(mod, GradedSubmodule::full(1, 3)));
}

TEST_CASE("mixed and negative weights") {
    // Weights (1,-1): colength-3 censuses separate all staircases.
    GradedHilbModel m = GradedHilbModel::build(1, -1, {{0, 1}, {-1, 1}, {1, 1}});
    REQUIRE(m.fixed_points.size() == 1);
    CHECK(m.fixed_points[0] == Staircase({2, 1}));
    CHECK(m.embedding_degrees.empty());
    CHECK(piece_equal(module_M(m, CX, CY, 2), GradedSubmodule::full(1, 2)));

    GradedHilbModel flipped = GradedHilbModel::build(-1, -1, {{0, 1}, {-1, 1}, {-2, 1}});
    GradedHilbModel plain = GradedHilbModel::build(1, 1, {{0, 1}, {1, 1}, {2, 1}});
    CHECK(flipped.fixed_points == plain.fixed_points);
    CHECK(flipped.embedding_degrees == plain.embedding_degrees);

    CHECK_THROWS(GradedHilbModel::build(0, 1, {{0, 1}}));
}
