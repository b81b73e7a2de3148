#pragma once

#include <hilb/graded_hilbert.hpp>
#include <hilb/hilb_points.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

/// One graded-Hilbert-scheme factor of a fixed component, sitting at an
/// isolated T'-fixed surface point.
struct PointFactor {
    size_t point_id = 0;
    GradedHilbModel model;
};

/// One fixed-line factor: a product of projective spaces P^{m_l}, one per
/// distinct horizontal length l. chi_line is the direction character at
/// endpoint 0 of the line.
struct LineFactor {
    size_t line_id = 0;
    Character chi_line;
    std::vector<std::pair<int64_t, int64_t>> lengths;  // (l, m_l), l descending
};

/// An irreducible component of (S^[d])^{T'}: a product of point and line
/// factors, together with the bijection from factor fixed-point tuples to
/// global fixed points (indices into enumerate_fixed_points(S,d)).
///
/// Tuple order: point factors first (choice = index into model.fixed_points),
/// then per line factor one choice j = 0..m_l per length (j = rows at
/// endpoint 0), mixed-radix with the last choice fastest.
struct ComponentModel {
    std::vector<PointFactor> point_factors;
    std::vector<LineFactor> line_factors;
    std::vector<size_t> radices;          // choice counts, in tuple order
    std::vector<size_t> global_of_tuple;  // flattened tuple -> global index

    size_t tuple_count() const;
};

/// Primitive characters (canonical sign) proportional to some tangent weight
/// at some fixed point; subtori outside this list have (S^[d])^{T'} = (S^[d])^T.
std::vector<Subtorus> relevant_subtori(const ToricSurface& s, int64_t d);

std::vector<ComponentModel> component_decomposition(const ToricSurface& s, int64_t d,
                                                    const Subtorus& sub);

/// Generators of the equivariant Chow module of P^m with fixed-point weights
/// j*chi, j = 0..m: the vectors ((j*chi)^k)_j for k = 0..m.
std::vector<GradedVector> projective_space_generators(int64_t m, const Character& chi);

/// Equivariant Chow module of a product of projective spaces (one P^{m_l} per
/// length), over its own fixed-point tuples.
GradedSubmodule module_N(const std::vector<std::pair<int64_t, int64_t>>& lengths,
                         const Character& chi_line, int64_t degree_bound);

/// Kunneth: all products of one generator per factor, re-indexed through
/// global_of_tuple into R^{n_global}; returns the generated submodule.
GradedSubmodule kunneth_tensor(const std::vector<std::vector<GradedVector>>& factor_generators,
                               const std::vector<size_t>& global_of_tuple, size_t n_global,
                               int64_t degree_bound);

/// Generators of the component's Chow module inside R^{n_global}.
std::vector<GradedVector> component_generators(const ToricSurface& s, const ComponentModel& c,
                                               size_t n_global, int64_t degree_bound);

/// Direct sum over components of the Kunneth modules: Im(i_{T'}^*).
GradedSubmodule image_subtorus(const ToricSurface& s, int64_t d, const Subtorus& sub,
                               int64_t degree_bound);

/// A_T^*(S^[d]) as a submodule of R^F: intersection over relevant subtori.
GradedSubmodule equivariant_chow(const ToricSurface& s, int64_t d, int64_t degree_bound);

/// Independent membership oracle: the Bott-integration congruences
///   sum_p alpha_p beta_ip prod_{q != p} e_q == 0  mod  prod_p e_p
/// for every generator beta_i. euler[p] must be the Euler class at point p,
/// given by its tangent weights.
bool congruence_membership(const GradedVector& alpha, const std::vector<GradedVector>& betas,
                           const std::vector<TangentRep>& tangents);

/// A congruence relation sum_i coeff_i * v_{label_i} == 0 mod prod chi^k.
struct RelationSpec {
    std::string name;
    std::vector<std::pair<std::string, Rational>> terms;
    std::vector<std::pair<Character, int64_t>> modulus;
};

/// A symmetry of the surface acting on fixed-point indices and on characters.
struct LabelSymmetry {
    std::string name;
    std::vector<size_t> fixed_point_image;        // global index -> global index
    int64_t char_matrix[2][2] = {{1, 0}, {0, 1}}; // action on (a,b)
};

struct RelationReport {
    std::string relation;
    std::string symmetry;
    bool passed = false;
    std::string witness;  // first failing (degree, basis vector) if any
};

struct RelationsSummary {
    std::vector<RelationReport> reports;
    bool all_passed = false;
    bool complete = false;  // relations cut out exactly M, degreewise
};

RelationsSummary verify_relations(const GradedSubmodule& m, const std::vector<RelationSpec>& rels,
                                  const std::map<std::string, size_t>& labels,
                                  const std::vector<LabelSymmetry>& symmetries);

}  // namespace hilb
