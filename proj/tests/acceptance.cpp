// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each check recomputes its claim from scratch against frozen
// expected values or an independent oracle.
#include <hilb/p2_labels.hpp>
#include <hilb/relations_io.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hilb;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

GradedVector gv(int64_t deg, std::map<size_t, Polynomial> e) {
    return GradedVector::make(deg, std::move(e));
}

const Polynomial T1 = Polynomial::monomial(1, 0);

/// Criterion 1: every Theorem 5.3 congruence and every S3 translate holds on
/// the computed module, and together they cut it out exactly up to degree 6.
void criterion_relations(const GradedSubmodule& m, const ToricSurface& s) {
    P2ThreeLabels labels = p2_three_labels(s);
    RelationsSummary sum = verify_relations(m, load_relations(DATA_DIR "/thm53.json"),
                                            labels.labels, labels.symmetries);
    std::ostringstream detail;
    for (const RelationReport& r : sum.reports)
        if (!r.passed) detail << r.relation << "/" << r.symmetry << " ";
    if (!sum.complete) detail << "relations do not cut out the module";
    report(1, "Theorem 5.3 relations and S3 translates, with completeness",
           sum.all_passed && sum.reports.size() == 90 && sum.complete, detail.str());
}

void criterion_counts(const ToricSurface& s) {
    bool ok = enumerate_fixed_points(s, 1).size() == 3 &&
              enumerate_fixed_points(s, 2).size() == 9 &&
              enumerate_fixed_points(s, 3).size() == 22;
    report(2, "fixed-point counts 3, 9, 22 for (P^2)^[d], d = 1, 2, 3", ok);
}

void criterion_tangent_oracle() {
    const Character cx{1, 0}, cy{0, 1};
    bool ok = true;
    std::string detail;
    for (int64_t n = 1; n <= 6 && ok; ++n)
        for (const Staircase& e : enumerate_staircases(n)) {
            std::vector<Character> couples = tangent_characters(e, cx, cy);
            std::vector<Character> oracle = tangent_oracle(e, cx, cy);
            std::sort(oracle.begin(), oracle.end());
            if (couples != oracle || couples.size() != size_t(2 * n)) {
                ok = false;
                detail = "mismatch at " + e.str();
                break;
            }
        }
    report(3, "cleft-couple tangent basis matches the Hom oracle, size 2n, n <= 6", ok, detail);
}

void criterion_component_table(const ToricSurface& s) {
    Subtorus sub(Character{1, -1});
    std::vector<HilbFixedPoint> global = enumerate_fixed_points(s, 3);
    std::vector<ComponentModel> comps = component_decomposition(s, 3, sub);
    std::array<HilbFixedPoint, 5> base = {
        HilbFixedPoint{{{2, Staircase({2, 1})}}},
        HilbFixedPoint{{{2, Staircase({1, 1, 1})}}},
        HilbFixedPoint{{{2, Staircase({1, 1})}, {0, Staircase({1})}}},
        HilbFixedPoint{{{2, Staircase({1, 1})}, {1, Staircase({1})}}},
        HilbFixedPoint{{{0, Staircase({1})}, {1, Staircase({1})}, {2, Staircase({1})}}}};

    auto component_of = [&](const HilbFixedPoint& p) -> const ComponentModel& {
        size_t g = size_t(std::find(global.begin(), global.end(), p) - global.begin());
        for (const ComponentModel& c : comps)
            if (std::count(c.global_of_tuple.begin(), c.global_of_tuple.end(), g)) return c;
        throw std::logic_error("acceptance: fixed point in no component");
    };
    // Independent dimension: tangent weights fixed by T' are the multiples of chi.
    auto dim_at = [&](const HilbFixedPoint& p) {
        int64_t n = 0;
        for (const Character& w : tangent_representation(s, p).weights)
            if (w.a * sub.chi.b == w.b * sub.chi.a) ++n;
        return n;
    };

    std::string detail;
    bool ok = true;
    const int64_t want_dim[5] = {0, 1, 2, 2, 2};
    for (size_t i = 0; i < 5 && ok; ++i)
        if (dim_at(base[i]) != want_dim[i]) {
            ok = false;
            detail = "dimension mismatch at base point " + std::to_string(i);
        }
    if (ok) {
        const ComponentModel& a = component_of(base[0]);
        const ComponentModel& b = component_of(base[1]);
        const ComponentModel& c = component_of(base[2]);
        const ComponentModel& d = component_of(base[3]);
        const ComponentModel& e = component_of(base[4]);
        GradedHilbModel iarrobino = GradedHilbModel::build(1, 1, {{0, 1}, {1, 1}, {2, 1}});
        auto is_p1xp1 = [](const ComponentModel& m) {
            size_t pf = 0;
            for (const PointFactor& f : m.point_factors)
                if (f.model.fixed_points.size() == 2) ++pf;
            return m.tuple_count() == 4 && pf == 1 && m.line_factors.size() == 1;
        };
        ok = a.tuple_count() == 1 && b.tuple_count() == 2 && is_p1xp1(c) && is_p1xp1(d) &&
             e.tuple_count() == 3;
        for (const PointFactor& f : b.point_factors)
            if (f.model.fixed_points.size() == 2)
                ok = ok && f.model.census == iarrobino.census &&
                     f.model.fixed_points == iarrobino.fixed_points;
        for (const LineFactor& f : e.line_factors)
            ok = ok && f.lengths == std::vector<std::pair<int64_t, int64_t>>{{1, 2}};
        if (!ok) detail = "shape mismatch";
    }
    report(4, "T' = ker(t1/t2) component table through A..E: point, P1, P1xP1, P1xP1, P2", ok,
           detail);
}

void criterion_graded_example() {
    GradedHilbModel model = GradedHilbModel::build(1, 1, {{0, 1}, {1, 1}});
    GradedSubmodule m = module_M(model, {1, 0}, {0, 0}, 4);
    GradedSubmodule expected = generate_module(
        {gv(0, {{0, Polynomial(1)}, {1, Polynomial(1)}}), gv(1, {{0, T1}})}, 2, 4);
    report(5, "weights (1,1), H = (1,1) specializes to R(t,0) + R(1,1) up to degree 4",
           piece_equal(m, expected));
}

void criterion_betti(const ToricSurface& s, const GradedSubmodule& m3) {
    const std::vector<std::vector<size_t>> expected = {
        {1, 1, 1}, {1, 2, 3, 2, 1}, {1, 2, 5, 6, 5, 2, 1}};
    bool ok = true;
    std::string detail;
    for (int64_t d = 1; d <= 3 && ok; ++d) {
        GradedSubmodule m = d == 3 ? m3 : equivariant_chow(s, d, 2 * d);
        std::vector<size_t> betti = quotient_betti(m);
        std::vector<size_t> bb = betti_bb(s, d, {1, 4});
        std::vector<size_t> even;
        for (size_t k = 0; k < bb.size(); k += 2) even.push_back(bb[k]);
        size_t sum = 0;
        for (size_t x : betti) sum += x;
        std::vector<size_t> rev(betti.rbegin(), betti.rend());
        ok = betti == expected[size_t(d - 1)] && betti == even &&
             sum == enumerate_fixed_points(s, d).size() && rev == betti;
        if (!ok) detail = "d = " + std::to_string(d);
    }
    report(6, "quotient Betti numbers match Bialynicki-Birula for (P^2)^[d], d <= 3", ok, detail);
}

void criterion_dual_membership(const ToricSurface& s, const GradedSubmodule& m3) {
    bool ok = true;
    std::string detail;

    GradedSubmodule m2 = equivariant_chow(s, 2, 4);
    std::vector<GradedVector> betas2 = module_generators(m2);
    std::vector<TangentRep> tangents2;
    for (const HilbFixedPoint& p : enumerate_fixed_points(s, 2))
        tangents2.push_back(tangent_representation(s, p));
    for (int64_t k = 0; k <= m2.degree_bound && ok; ++k)
        for (const GradedVector& v : m2.piece_basis(k))
            if (!congruence_membership(v, betas2, tangents2)) {
                ok = false;
                detail = "basis vector of (P^2)^[2] fails the congruences";
            }

    std::vector<GradedVector> betas3 = module_generators(m3);
    std::vector<TangentRep> tangents3;
    for (const HilbFixedPoint& p : enumerate_fixed_points(s, 3))
        tangents3.push_back(tangent_representation(s, p));
    std::mt19937 rng(20070306);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 50 && ok; ++trial) {
        int64_t k = trial % 7;
        GradedVector v = gv(k, {});
        if (trial % 2 == 0) {
            // Random rational combination of the piece basis: a member.
            for (const GradedVector& b : m3.piece_basis(k)) {
                int c = coeff(rng);
                if (c == 0) continue;
                for (const auto& [p, f] : b.entries) {
                    auto it = v.entries.find(p);
                    Polynomial add = f.scaled(Rational(c));
                    if (it == v.entries.end())
                        v.entries[p] = add;
                    else
                        it->second += add;
                }
            }
        } else {
            // Random sparse tuple: almost surely not a member.
            for (size_t p = 0; p < 22; ++p) {
                int c = coeff(rng);
                if (c != 0)
                    v.entries[p] = Polynomial::monomial(k - (trial % (k + 1)), trial % (k + 1))
                                       .scaled(Rational(c));
            }
        }
        for (auto it = v.entries.begin(); it != v.entries.end();)
            it = it->second.is_zero() ? v.entries.erase(it) : std::next(it);
        if (piece_membership(v, m3) != congruence_membership(v, betas3, tangents3)) {
            ok = false;
            detail = "oracle disagreement at trial " + std::to_string(trial);
        }
    }
    report(7, "Bott congruence membership agrees with linear-algebra membership", ok, detail);
}

void criterion_incidence() {
    GradedHilbModel grass = GradedHilbModel::build(1, 1, {{0, 1}, {1, 2}, {2, 3}, {3, 2}});
    bool ok = grass.fixed_points.size() == 6 &&
              grass.embedding_degrees == std::vector<int64_t>{3};
    std::string detail = ok ? "" : "Grass(2, k[x,y]_3) has the wrong cell set";
    std::vector<std::pair<int64_t, int64_t>> subsets;
    for (const Staircase& e : grass.fixed_points) {
        std::vector<int64_t> js;
        for (const Cell& c : e.cells())
            if (c.a + c.b == 3) js.push_back(c.a);
        std::sort(js.begin(), js.end());
        subsets.push_back({js[0], js[1]});
    }
    for (size_t i = 0; i < subsets.size() && ok; ++i)
        for (size_t j = 0; j < subsets.size(); ++j) {
            bool bruhat = subsets[i].first >= subsets[j].first &&
                          subsets[i].second >= subsets[j].second;
            if (incidence_necessary(grass.fixed_points[i], grass.fixed_points[j]) != bruhat) {
                ok = false;
                detail = grass.fixed_points[i].str() + " vs " + grass.fixed_points[j].str();
                break;
            }
        }
    for (int64_t n = 1; n <= 6 && ok; ++n)
        for (const Staircase& e : enumerate_staircases(n))
            if (complement_in_box(complement_in_box(e, n), n) != e) {
                ok = false;
                detail = "complement not involutive at " + e.str();
            }
    report(8, "incidence matches Bruhat order on Grass(2, k[x,y]_3); complement involutive", ok,
           detail);
}

void criterion_kunneth() {
    Character chi{1, 0};
    std::vector<GradedVector> g = projective_space_generators(1, chi);
    // Kunneth products in lexicographic pick order over tuple index 2*a + b.
    std::vector<GradedVector> products;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            std::map<size_t, Polynomial> entries;
            for (size_t a = 0; a < 2; ++a)
                for (size_t b = 0; b < 2; ++b) {
                    Polynomial f = g[i].entry(a) * g[j].entry(b);
                    if (!f.is_zero()) entries[2 * a + b] = f;
                }
            products.push_back(gv(g[i].degree + g[j].degree, std::move(entries)));
        }
    std::vector<GradedVector> expected = {
        gv(0, {{0, Polynomial(1)}, {1, Polynomial(1)}, {2, Polynomial(1)}, {3, Polynomial(1)}}),
        gv(1, {{1, T1}, {3, T1}}),
        gv(1, {{2, T1}, {3, T1}}),
        gv(2, {{3, T1 * T1}})};
    bool ok = products.size() == 4;
    for (size_t i = 0; i < 4 && ok; ++i)
        ok = products[i].degree == expected[i].degree &&
             products[i].entries == expected[i].entries;
    GradedSubmodule n = module_N({{2, 1}, {1, 1}}, chi, 4);
    ok = ok && piece_equal(n, generate_module(expected, 4, 4));
    report(9, "Kunneth generators of A_T^*(P^1 x P^1) reproduced bit-exactly", ok);
}

}  // namespace

int main() {
    ToricSurface s = ToricSurface::p2();
    GradedSubmodule m3 = equivariant_chow(s, 3, 6);

    criterion_relations(m3, s);
    criterion_counts(s);
    criterion_tangent_oracle();
    criterion_component_table(s);
    criterion_graded_example();
    criterion_betti(s, m3);
    criterion_dual_membership(s, m3);
    criterion_incidence();
    criterion_kunneth();

    if (failures) std::cout << failures << " criteria failed" << std::endl;
    return failures ? 1 : 0;
}
