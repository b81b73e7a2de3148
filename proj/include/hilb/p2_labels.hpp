#pragma once

#include <hilb/chow.hpp>

#include <array>
#include <string>
#include <vector>

namespace hilb {

/// A toric automorphism of P^2: a permutation of the three fixed points
/// together with the induced integral action on characters.
struct S3Element {
    std::string name;
    std::array<size_t, 3> perm;       // point id -> point id
    int64_t mat[2][2] = {{1, 0}, {0, 1}};
};

/// The six toric automorphisms of the standard P^2 fan, identity first.
std::vector<S3Element> s3_p2();

/// Image of a Hilbert scheme fixed point: each part moves to the permuted
/// surface point and is transposed when the chart axes come back swapped.
HilbFixedPoint apply_s3(const ToricSurface& s, const S3Element& g, const HilbFixedPoint& p);

/// The classical labelling of the 22 fixed points of (P^2)^[3]: five base
/// configurations a..e plus transposition subscripts, and the translate data
/// needed to check the congruence relations.
struct P2ThreeLabels {
    std::map<std::string, size_t> labels;     // "a", "a12", ... -> global index
    std::vector<LabelSymmetry> symmetries;
};

/// Labels with explicit base points (order a, b, c, d, e) and the three
/// subscript transpositions (order 12, 13, 23).
P2ThreeLabels p2_three_labels(const ToricSurface& s, const std::array<HilbFixedPoint, 5>& base,
                              const std::array<S3Element, 3>& subscripts);

/// The pinned classical assignment.
P2ThreeLabels p2_three_labels(const ToricSurface& s);

}  // namespace hilb
