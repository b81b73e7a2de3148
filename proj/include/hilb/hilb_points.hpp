#pragma once

#include <hilb/staircase.hpp>
#include <hilb/toric.hpp>

#include <map>
#include <string>
#include <vector>

namespace hilb {

/// A T-fixed point of S^[d]: one staircase per toric point of S (empty parts
/// omitted), total colength d.
struct HilbFixedPoint {
    std::map<size_t, Staircase> parts;

    int64_t total() const;
    Staircase part(size_t point_id) const {
        auto it = parts.find(point_id);
        return it == parts.end() ? Staircase() : it->second;
    }
    /// Canonical id, e.g. "p1:[1];p3:[2,1]"; "()" for d = 0.
    std::string label() const;
    friend auto operator<=>(const HilbFixedPoint&, const HilbFixedPoint&) = default;
};

struct TangentRep {
    std::vector<Character> weights;  // sorted multiset, size 2d
};

/// All T-fixed points of S^[d], in deterministic order.
std::vector<HilbFixedPoint> enumerate_fixed_points(const ToricSurface& s, int64_t d);

/// Tangent T-representation via cleft couples in each chart.
TangentRep tangent_representation(const ToricSurface& s, const HilbFixedPoint& p);

/// Independent tangent oracle: computes Hom(I, k[x,y]/I) character by
/// character from the generator/syzygy chain of the monomial ideal.
std::vector<Character> tangent_oracle(const Staircase& e, const Character& chi_x,
                                      const Character& chi_y, int64_t bound = 8);

/// Product of the linear forms of all tangent weights (top equivariant Chern
/// class of the tangent space). Throws on a zero weight.
Polynomial euler_class(const TangentRep& rep);

/// Bialynicki-Birula counting: b_{2k} = #fixed points with k tangent weights
/// positive against lambda. Throws (naming the weight) if lambda is not generic.
std::vector<size_t> betti_bb(const ToricSurface& s, int64_t d, const Character& lambda);

}  // namespace hilb
