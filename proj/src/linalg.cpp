#include <hilb/linalg.hpp>

#include <algorithm>
#include <cassert>

namespace hilb {

namespace {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

// Clear denominators row by row; zero rows are dropped.
IntMatrix to_integer_rows(const RatMatrix& m, size_t ncols) {
    IntMatrix out;
    for (const RatRow& row : m) {
        assert(row.size() == ncols);
        Integer lcm = 1;
        bool nonzero = false;
        for (const Rational& r : row) {
            if (r == 0) continue;
            nonzero = true;
            Integer d = denominator(r);
            lcm = lcm / gcd(lcm, d) * d;
        }
        if (!nonzero) continue;
        IntRow irow(ncols);
        for (size_t j = 0; j < ncols; ++j) {
            const Rational& r = row[j];
            irow[j] = numerator(r) * (lcm / denominator(r));
        }
        out.push_back(std::move(irow));
    }
    return out;
}

// Fraction-free (Bareiss) elimination to row echelon form in place.
// Returns the pivot column of each surviving row.
std::vector<size_t> bareiss_echelon(IntMatrix& m, size_t ncols) {
    std::vector<size_t> pivots;
    Integer prev_pivot = 1;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m.size(); ++c) {
        size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const Integer pivot = m[r][c];
        for (size_t i = r + 1; i < m.size(); ++i) {
            for (size_t j = c + 1; j < ncols; ++j)
                m[i][j] = (pivot * m[i][j] - m[i][c] * m[r][j]) / prev_pivot;
            m[i][c] = 0;
        }
        prev_pivot = pivot;
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

}  // namespace

RatMatrix rref(RatMatrix m) {
    if (m.empty()) return {};
    size_t ncols = m[0].size();
    IntMatrix im = to_integer_rows(m, ncols);
    std::vector<size_t> pivots = bareiss_echelon(im, ncols);

    // Normalize to reduced echelon form over Q.
    RatMatrix out(im.size(), RatRow(ncols));
    for (size_t i = 0; i < im.size(); ++i)
        for (size_t j = 0; j < ncols; ++j) out[i][j] = Rational(im[i][j]);
    for (size_t i = out.size(); i-- > 0;) {
        size_t p = pivots[i];
        Rational inv = out[i][p];
        for (size_t j = p; j < ncols; ++j) out[i][j] /= inv;
        for (size_t k = 0; k < i; ++k) {
            Rational f = out[k][p];
            if (f == 0) continue;
            for (size_t j = p; j < ncols; ++j) out[k][j] -= f * out[i][j];
        }
    }
    return out;
}

size_t rank(const RatMatrix& m) { return rref(m).size(); }

bool in_row_space(const RatMatrix& basis, const RatRow& v) {
    RatRow w = v;
    size_t ncols = w.size();
    for (const RatRow& row : basis) {
        size_t p = 0;
        while (p < ncols && row[p] == 0) ++p;
        if (p == ncols) continue;
        if (w[p] == 0) continue;
        Rational f = w[p];  // row has pivot 1 at p
        for (size_t j = p; j < ncols; ++j) w[j] -= f * row[j];
    }
    for (const Rational& x : w)
        if (x != 0) return false;
    return true;
}

RatMatrix row_space_intersection(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a[0].size();
    RatMatrix z;
    z.reserve(a.size() + b.size());
    for (const RatRow& r : a) {
        RatRow row(2 * n);
        std::copy(r.begin(), r.end(), row.begin());
        std::copy(r.begin(), r.end(), row.begin() + n);
        z.push_back(std::move(row));
    }
    for (const RatRow& r : b) {
        RatRow row(2 * n);
        std::copy(r.begin(), r.end(), row.begin());
        z.push_back(std::move(row));
    }
    z = rref(z);
    RatMatrix out;
    for (const RatRow& row : z) {
        bool left_zero = true;
        for (size_t j = 0; j < n && left_zero; ++j) left_zero = row[j] == 0;
        if (left_zero) out.emplace_back(row.begin() + n, row.end());
    }
    return rref(out);
}

RatMatrix kernel(const RatMatrix& m, size_t ncols) {
    RatMatrix r = rref(m);
    std::vector<size_t> pivots;
    std::vector<bool> is_pivot(ncols, false);
    for (const RatRow& row : r) {
        size_t p = 0;
        while (p < ncols && row[p] == 0) ++p;
        if (p < ncols) {
            pivots.push_back(p);
            is_pivot[p] = true;
        }
    }
    RatMatrix out;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatRow v(ncols);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
        out.push_back(std::move(v));
    }
    return rref(out);
}

}  // namespace hilb
