#pragma once

#include <hilb/linalg.hpp>
#include <hilb/polynomial.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb {

/// A homogeneous tuple of polynomials indexed by fixed points 0..n-1.
/// Zero entries are omitted from the map.
struct GradedVector {
    int64_t degree = 0;
    std::map<size_t, Polynomial> entries;

    static GradedVector make(int64_t degree, std::map<size_t, Polynomial> entries);

    Polynomial entry(size_t p) const {
        auto it = entries.find(p);
        return it == entries.end() ? Polynomial() : it->second;
    }

    bool is_zero() const { return entries.empty(); }

    /// Entrywise product; degrees add.
    friend GradedVector operator*(const GradedVector& a, const GradedVector& b);
    GradedVector times(const Polynomial& homog_f) const;

    /// Coordinates in R_k^F: per fixed point the block (t1^k, t1^{k-1}t2, ..., t2^k).
    RatRow coordinates(size_t n_points) const;
    static GradedVector from_coordinates(const RatRow& row, int64_t degree, size_t n_points);
};

/// A graded R-submodule of R^F stored as canonical degreewise bases.
struct GradedSubmodule {
    size_t n_points = 0;
    int64_t degree_bound = 0;
    std::vector<RatMatrix> pieces;  // pieces[k] in RREF, k = 0..degree_bound

    size_t piece_dim(int64_t k) const { return pieces.at(static_cast<size_t>(k)).size(); }

    std::vector<GradedVector> piece_basis(int64_t k) const;

    /// Degreewise basis of the full ambient module R^F.
    static GradedSubmodule full(size_t n_points, int64_t degree_bound);

    /// Human-readable violation of the t1/t2-closure invariant, if any.
    std::optional<std::string> closure_violation() const;
};

/// Reduced basis of span_Q{ m*g : g generator of degree e <= k, m monomial of
/// degree k-e } inside R_k^F.
RatMatrix span_piece(const std::vector<GradedVector>& generators, int64_t k, size_t n_points);

/// Module generated degreewise by the given homogeneous generators.
GradedSubmodule generate_module(const std::vector<GradedVector>& generators, size_t n_points,
                                int64_t degree_bound);

bool piece_membership(const GradedVector& v, const GradedSubmodule& m);
GradedSubmodule piece_intersection(const std::vector<GradedSubmodule>& ms);
bool piece_equal(const GradedSubmodule& a, const GradedSubmodule& b);

/// dim_Q(M_k / (t1 M_{k-1} + t2 M_{k-1})) for k = 0..bound.
/// Throws if the closure invariant fails.
std::vector<size_t> quotient_betti(const GradedSubmodule& m);

/// Minimal degreewise generators: piece-k basis vectors completing
/// t1 M_{k-1} + t2 M_{k-1} to M_k, for every k <= bound.
std::vector<GradedVector> module_generators(const GradedSubmodule& m);

}  // namespace hilb
