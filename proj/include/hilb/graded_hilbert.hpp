#pragma once

#include <hilb/graded_module.hpp>
#include <hilb/staircase.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace hilb {

/// A graded (Iarrobino) Hilbert scheme H_{ab,H}: T'-fixed subschemes in one
/// chart whose quotient has the prescribed character census. Weights are the
/// T'-weights of the chart coordinates; they may be negative or of mixed sign,
/// but the Grassmannian-product embedding machinery (embedding degrees, Chern
/// generators) only applies to the positive case.
struct GradedHilbModel {
    int64_t wa = 1, wb = 1;
    std::map<int64_t, int64_t> census;      // degree -> dim of the quotient piece
    std::vector<Staircase> fixed_points;    // staircases realizing the census
    std::vector<int64_t> embedding_degrees; // d with 0 < H_d < dim k[x,y]_d

    bool positive() const { return wa > 0 && wb > 0; }
    int64_t total() const;

    /// Both weights must be nonzero. Negative pairs are flipped (same scheme,
    /// inverse parameter); mixed signs keep verbatim and get no embedding
    /// degrees.
    static GradedHilbModel build(int64_t wa, int64_t wb,
                                 const std::map<int64_t, int64_t>& census);
    static GradedHilbModel from_hilbert(const WeightedHilbertFunction& h);
};

/// Number of monomials of weighted degree d (weights positive).
int64_t weighted_ambient_dim(int64_t wa, int64_t wb, int64_t d);

/// Characters, in the given surface chart, of the census monomials of
/// weighted degree d inside E. Length = H_d.
std::vector<Character> quotient_characters(const GradedHilbModel& model, const Staircase& e,
                                           int64_t d, const Character& chi_x,
                                           const Character& chi_y);

/// Entry at each fixed point: e_j of the degree-d quotient characters.
/// Homogeneous of degree j, 0 <= j <= H_d.
GradedVector chern_generator(const GradedHilbModel& model, int64_t d, int64_t j,
                             const Character& chi_x, const Character& chi_y);

/// The equivariant Chow module of H_{ab,H} inside R^{fixed_points}: generated
/// by all monomials in the Chern generators of total degree <= degree_bound.
/// Mixed-sign weights require a single fixed point (isolated component) and
/// return the full rank-one module.
GradedSubmodule module_M(const GradedHilbModel& model, const Character& chi_x,
                         const Character& chi_y, int64_t degree_bound);

}  // namespace hilb
