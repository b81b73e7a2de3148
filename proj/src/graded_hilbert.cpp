#include <hilb/graded_hilbert.hpp>

#include <algorithm>
#include <stdexcept>

namespace hilb {

int64_t GradedHilbModel::total() const {
    int64_t t = 0;
    for (const auto& [d, v] : census) t += v;
    return t;
}

GradedHilbModel GradedHilbModel::build(int64_t wa, int64_t wb,
                                       const std::map<int64_t, int64_t>& census) {
    if (wa == 0 || wb == 0)
        throw std::invalid_argument("GradedHilbModel: zero weight (point lies on a fixed line)");
    GradedHilbModel m;
    m.wa = wa;
    m.wb = wb;
    m.census = census;
    if (wa < 0 && wb < 0) {  // inverse parameter, same fixed subschemes
        m.wa = -wa;
        m.wb = -wb;
        m.census.clear();
        for (const auto& [d, v] : census) m.census[-d] = v;
    }
    for (const Staircase& e : enumerate_staircases(m.total()))
        if (weighted_census(e, m.wa, m.wb) == m.census) m.fixed_points.push_back(e);
    if (m.positive())
        for (const auto& [d, v] : m.census)
            if (v > 0 && v < weighted_ambient_dim(m.wa, m.wb, d))
                m.embedding_degrees.push_back(d);
    return m;
}

GradedHilbModel GradedHilbModel::from_hilbert(const WeightedHilbertFunction& h) {
    return build(h.wa, h.wb, h.values);
}

int64_t weighted_ambient_dim(int64_t wa, int64_t wb, int64_t d) {
    if (wa <= 0 || wb <= 0) throw std::invalid_argument("weighted_ambient_dim: weights must be positive");
    int64_t n = 0;
    for (int64_t i = 0; i * wa <= d; ++i)
        if ((d - i * wa) % wb == 0) ++n;
    return n;
}

std::vector<Character> quotient_characters(const GradedHilbModel& model, const Staircase& e,
                                           int64_t d, const Character& chi_x,
                                           const Character& chi_y) {
    if (std::find(model.embedding_degrees.begin(), model.embedding_degrees.end(), d) ==
        model.embedding_degrees.end())
        throw std::invalid_argument("quotient_characters: not an embedding degree");
    std::vector<Character> out;
    for (const Cell& c : e.cells())
        if (model.wa * c.a + model.wb * c.b == d)
            out.push_back(chi_x * c.a + chi_y * c.b);
    return out;
}

GradedVector chern_generator(const GradedHilbModel& model, int64_t d, int64_t j,
                             const Character& chi_x, const Character& chi_y) {
    std::map<size_t, Polynomial> entries;
    for (size_t p = 0; p < model.fixed_points.size(); ++p) {
        std::vector<Character> chars =
            quotient_characters(model, model.fixed_points[p], d, chi_x, chi_y);
        if (j < 0 || j > static_cast<int64_t>(chars.size()))
            throw std::invalid_argument("chern_generator: rank out of range");
        Polynomial v = elementary_symmetric(chars, static_cast<size_t>(j));
        if (!v.is_zero()) entries[p] = v;
    }
    return GradedVector::make(j, std::move(entries));
}

GradedSubmodule module_M(const GradedHilbModel& model, const Character& chi_x,
                         const Character& chi_y, int64_t degree_bound) {
    size_t n = model.fixed_points.size();
    if (n == 0) throw std::invalid_argument("module_M: unattainable Hilbert function");
    if (!model.positive()) {
        if (n != 1)
            throw std::logic_error(
                "module_M: mixed-sign weights with a non-isolated fixed locus");
        return GradedSubmodule::full(1, degree_bound);
    }

    std::vector<GradedVector> base;
    for (int64_t d : model.embedding_degrees)
        for (int64_t j = 1; j <= model.census.at(d); ++j)
            base.push_back(chern_generator(model, d, j, chi_x, chi_y));

    // All monomials in the base generators of total degree <= bound.
    std::map<size_t, Polynomial> unit;
    for (size_t p = 0; p < n; ++p) unit[p] = Polynomial(1);
    std::vector<GradedVector> gens;
    auto rec = [&](auto&& self, size_t start, const GradedVector& cur) -> void {
        gens.push_back(cur);
        for (size_t i = start; i < base.size(); ++i)
            if (cur.degree + base[i].degree <= degree_bound) self(self, i, cur * base[i]);
    };
    rec(rec, 0, GradedVector::make(0, unit));
    return generate_module(gens, n, degree_bound);
}

}  // namespace hilb
