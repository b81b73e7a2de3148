#pragma once

#include <hilb/rational.hpp>

#include <cstddef>
#include <vector>

namespace hilb {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

/// Reduced row echelon form over Q (canonical basis of the row space).
/// Elimination is fraction-free (Bareiss) on a denominator-cleared integer
/// copy, then normalized. Zero rows are dropped.
RatMatrix rref(RatMatrix m);

size_t rank(const RatMatrix& m);

/// Is v in the row space of a matrix already in RREF?
bool in_row_space(const RatMatrix& basis, const RatRow& v);

/// Intersection of the row spaces (Zassenhaus). Result is in RREF.
RatMatrix row_space_intersection(const RatMatrix& a, const RatMatrix& b);

/// Canonical RREF basis of the right kernel {x : m x = 0}.
RatMatrix kernel(const RatMatrix& m, size_t ncols);

}  // namespace hilb
