#include <hilb/graded_module.hpp>

#include <algorithm>

namespace hilb {

namespace {

// Row of t1^a t2^b * v in degree-(v.degree+a+b) coordinates.
RatRow shifted_coordinates(const GradedVector& v, int64_t a, int64_t b, size_t n_points) {
    GradedVector w = v.times(Polynomial::monomial(a, b));
    return w.coordinates(n_points);
}

}  // namespace

GradedVector GradedVector::make(int64_t degree, std::map<size_t, Polynomial> entries) {
    GradedVector v;
    v.degree = degree;
    for (auto& [p, f] : entries) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous() || f.degree() != degree)
            throw std::invalid_argument("GradedVector: entry not homogeneous of the stated degree");
        v.entries.emplace(p, std::move(f));
    }
    return v;
}

GradedVector operator*(const GradedVector& a, const GradedVector& b) {
    GradedVector out;
    out.degree = a.degree + b.degree;
    for (const auto& [p, f] : a.entries) {
        auto it = b.entries.find(p);
        if (it == b.entries.end()) continue;
        Polynomial prod = f * it->second;
        if (!prod.is_zero()) out.entries.emplace(p, std::move(prod));
    }
    return out;
}

GradedVector GradedVector::times(const Polynomial& homog_f) const {
    GradedVector out;
    out.degree = degree + std::max<int64_t>(homog_f.degree(), 0);
    if (homog_f.is_zero()) return out;
    for (const auto& [p, f] : entries) {
        Polynomial prod = f * homog_f;
        if (!prod.is_zero()) out.entries.emplace(p, std::move(prod));
    }
    return out;
}

RatRow GradedVector::coordinates(size_t n_points) const {
    size_t width = static_cast<size_t>(degree) + 1;
    RatRow row(n_points * width);
    for (const auto& [p, f] : entries) {
        if (p >= n_points) throw std::invalid_argument("GradedVector: fixed point out of range");
        for (const auto& [e, c] : f.terms()) row[p * width + static_cast<size_t>(e.j)] = c;
    }
    return row;
}

GradedVector GradedVector::from_coordinates(const RatRow& row, int64_t degree, size_t n_points) {
    size_t width = static_cast<size_t>(degree) + 1;
    if (row.size() != n_points * width)
        throw std::invalid_argument("from_coordinates: size mismatch");
    GradedVector v;
    v.degree = degree;
    for (size_t p = 0; p < n_points; ++p) {
        Polynomial f;
        for (size_t j = 0; j < width; ++j) {
            const Rational& c = row[p * width + j];
            if (c != 0)
                f += Polynomial::monomial(degree - static_cast<int64_t>(j),
                                          static_cast<int64_t>(j), c);
        }
        if (!f.is_zero()) v.entries.emplace(p, std::move(f));
    }
    return v;
}

std::vector<GradedVector> GradedSubmodule::piece_basis(int64_t k) const {
    std::vector<GradedVector> out;
    for (const RatRow& row : pieces.at(static_cast<size_t>(k)))
        out.push_back(GradedVector::from_coordinates(row, k, n_points));
    return out;
}

GradedSubmodule GradedSubmodule::full(size_t n_points, int64_t degree_bound) {
    GradedSubmodule m;
    m.n_points = n_points;
    m.degree_bound = degree_bound;
    for (int64_t k = 0; k <= degree_bound; ++k) {
        size_t dim = n_points * (static_cast<size_t>(k) + 1);
        RatMatrix id(dim, RatRow(dim));
        for (size_t i = 0; i < dim; ++i) id[i][i] = 1;
        m.pieces.push_back(std::move(id));
    }
    return m;
}

std::optional<std::string> GradedSubmodule::closure_violation() const {
    for (int64_t k = 1; k <= degree_bound; ++k) {
        const RatMatrix& target = pieces[static_cast<size_t>(k)];
        for (const GradedVector& v : piece_basis(k - 1)) {
            for (auto [a, b] : {std::pair<int64_t, int64_t>{1, 0}, {0, 1}}) {
                RatRow row = shifted_coordinates(v, a, b, n_points);
                if (!in_row_space(target, row))
                    return "t" + std::string(a == 1 ? "1" : "2") +
                           " * (degree " + std::to_string(k - 1) +
                           " basis vector) escapes the degree " + std::to_string(k) + " piece";
            }
        }
    }
    return std::nullopt;
}

RatMatrix span_piece(const std::vector<GradedVector>& generators, int64_t k, size_t n_points) {
    RatMatrix rows;
    for (const GradedVector& g : generators) {
        if (g.is_zero()) continue;
        int64_t e = g.degree;
        if (e > k) continue;
        for (int64_t a = 0; a <= k - e; ++a)
            rows.push_back(shifted_coordinates(g, a, k - e - a, n_points));
    }
    if (rows.empty()) return {};
    return rref(std::move(rows));
}

GradedSubmodule generate_module(const std::vector<GradedVector>& generators, size_t n_points,
                                int64_t degree_bound) {
    GradedSubmodule m;
    m.n_points = n_points;
    m.degree_bound = degree_bound;
    for (int64_t k = 0; k <= degree_bound; ++k)
        m.pieces.push_back(span_piece(generators, k, n_points));
    return m;
}

bool piece_membership(const GradedVector& v, const GradedSubmodule& m) {
    if (v.degree > m.degree_bound)
        throw std::invalid_argument("piece_membership: degree exceeds module bound");
    for (const auto& [p, f] : v.entries)
        if (p >= m.n_points) throw std::invalid_argument("piece_membership: index mismatch");
    return in_row_space(m.pieces[static_cast<size_t>(v.degree)], v.coordinates(m.n_points));
}

GradedSubmodule piece_intersection(const std::vector<GradedSubmodule>& ms) {
    if (ms.empty()) throw std::invalid_argument("piece_intersection: empty list");
    GradedSubmodule out = ms[0];
    for (size_t i = 1; i < ms.size(); ++i) {
        const GradedSubmodule& m = ms[i];
        if (m.n_points != out.n_points || m.degree_bound != out.degree_bound)
            throw std::invalid_argument("piece_intersection: mismatched index sets or bounds");
        for (int64_t k = 0; k <= out.degree_bound; ++k) {
            size_t ki = static_cast<size_t>(k);
            out.pieces[ki] = row_space_intersection(out.pieces[ki], m.pieces[ki]);
        }
    }
    return out;
}

bool piece_equal(const GradedSubmodule& a, const GradedSubmodule& b) {
    if (a.n_points != b.n_points || a.degree_bound != b.degree_bound)
        throw std::invalid_argument("piece_equal: mismatched index sets or bounds");
    return a.pieces == b.pieces;  // canonical RREF
}

std::vector<size_t> quotient_betti(const GradedSubmodule& m) {
    if (auto bad = m.closure_violation())
        throw std::runtime_error("quotient_betti: closure invariant violated: " + *bad);
    std::vector<size_t> betti;
    for (int64_t k = 0; k <= m.degree_bound; ++k) {
        if (k == 0) {
            betti.push_back(m.piece_dim(0));
            continue;
        }
        RatMatrix shifted;
        for (const GradedVector& v : m.piece_basis(k - 1)) {
            shifted.push_back(shifted_coordinates(v, 1, 0, m.n_points));
            shifted.push_back(shifted_coordinates(v, 0, 1, m.n_points));
        }
        betti.push_back(m.piece_dim(k) - rank(shifted));
    }
    return betti;
}

std::vector<GradedVector> module_generators(const GradedSubmodule& m) {
    std::vector<GradedVector> gens;
    for (int64_t k = 0; k <= m.degree_bound; ++k) {
        RatMatrix lower;
        if (k > 0)
            for (const GradedVector& v : m.piece_basis(k - 1)) {
                lower.push_back(shifted_coordinates(v, 1, 0, m.n_points));
                lower.push_back(shifted_coordinates(v, 0, 1, m.n_points));
            }
        lower = rref(std::move(lower));
        for (const RatRow& row : m.pieces[static_cast<size_t>(k)]) {
            if (in_row_space(lower, row)) continue;
            lower.push_back(row);
            lower = rref(std::move(lower));
            gens.push_back(GradedVector::from_coordinates(row, k, m.n_points));
        }
    }
    return gens;
}

}  // namespace hilb
