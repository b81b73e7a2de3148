#pragma once

#include <hilb/polynomial.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

/// Cell (a,b) of N^2: the monomial x^a y^b outside a monomial ideal.
struct Cell {
    int64_t a = 0;
    int64_t b = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A finite order ideal of N^2, stored as weakly decreasing column heights
/// (heights[a] = number of cells in column x = a; no trailing zeros).
class Staircase {
public:
    Staircase() = default;
    explicit Staircase(std::vector<int64_t> heights);
    static Staircase from_cells(const std::vector<Cell>& cells);

    const std::vector<int64_t>& heights() const { return heights_; }
    int64_t colength() const;
    int64_t width() const { return static_cast<int64_t>(heights_.size()); }
    int64_t height(int64_t a) const {
        return a >= 0 && a < width() ? heights_[static_cast<size_t>(a)] : 0;
    }
    int64_t max_height() const { return heights_.empty() ? 0 : heights_[0]; }
    bool contains(Cell c) const { return c.a >= 0 && c.b >= 0 && c.b < height(c.a); }
    bool empty() const { return heights_.empty(); }

    std::vector<Cell> cells() const;  // column-major order
    Staircase transposed() const;

    friend auto operator<=>(const Staircase&, const Staircase&) = default;

    /// Partition notation "[2,1]"; the empty staircase is "[]".
    std::string str() const;
    static Staircase parse(const std::string& s);

private:
    std::vector<int64_t> heights_;
};

enum class CleftAxis { X, Y, Both };

/// A tangent basis element at a monomial ideal: a cleft (minimal generator)
/// paired with a staircase monomial.
struct CleftCouple {
    Cell cleft;
    Cell member;
    CleftAxis axis = CleftAxis::X;
    Character character(const Character& chi_x, const Character& chi_y) const {
        return chi_x * (member.a - cleft.a) + chi_y * (member.b - cleft.b);
    }
};

/// Quasi-homogeneous dimension census: degree -> number of cells.
struct WeightedHilbertFunction {
    int64_t wa = 1, wb = 1;                // gcd-normalized weights
    std::map<int64_t, int64_t> values;     // finitely supported

    int64_t total() const;
    int64_t at(int64_t d) const {
        auto it = values.find(d);
        return it == values.end() ? 0 : it->second;
    }
    friend auto operator<=>(const WeightedHilbertFunction&, const WeightedHilbertFunction&) =
        default;
    std::string str() const;
};

struct ReversePlanePartition {
    Staircase shape;
    std::map<Cell, int64_t> entries;

    int64_t at(Cell c) const {
        auto it = entries.find(c);
        return it == entries.end() ? 0 : it->second;
    }
    bool is_monotone() const;
    /// Left-justified integer array, top row first.
    std::string str() const;
};

/// All staircases of colength exactly n, in lex order on the height vectors.
std::vector<Staircase> enumerate_staircases(int64_t n);

/// Minimal generators of the monomial ideal, ordered by increasing x.
std::vector<Cell> clefts(const Staircase& e);

/// Set union of the x- and y-cleft couples; size 2*|E|. E must be nonempty.
std::vector<CleftCouple> cleft_couples(const Staircase& e);

/// Multiset { chi(member) - chi(cleft) } over all cleft couples; size 2|E|.
/// (chi_x, chi_y) must be a lattice basis.
std::vector<Character> tangent_characters(const Staircase& e, const Character& chi_x,
                                          const Character& chi_y);

/// H(d) = #{ (i,j) in E : wa*i + wb*j = d }, for arbitrary integer weights.
std::map<int64_t, int64_t> weighted_census(const Staircase& e, int64_t wa, int64_t wb);

/// Census packaged with gcd-normalized nonnegative weights (spec surface).
WeightedHilbertFunction weighted_hilbert_function(const Staircase& e, int64_t wa, int64_t wb);

/// All staircases whose (wa,wb)-census matches h.values.
std::vector<Staircase> enumerate_ideals_with_hilbert_function(const WeightedHilbertFunction& h);

/// Lexicographically least reverse plane partition with support E(J) linking
/// I to J, if one exists: (a,b) -> (a+n, b-n) must biject E(J) onto E(I).
std::optional<ReversePlanePartition> linkage(const Staircase& i, const Staircase& j);

/// 180-degree rotated complement of E(I) inside the N x N box.
Staircase complement_in_box(const Staircase& i, int64_t n);
/// Complement with the default box size = colength of I.
Staircase complement(const Staircase& i);

/// Necessary condition for Schubert-cell incidence: I linked to I' and
/// C(I) linked to C(I').
bool incidence_necessary(const Staircase& i, const Staircase& iprime);

}  // namespace hilb
