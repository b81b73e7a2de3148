#pragma once

#include <hilb/rational.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb {

/// A character (a,b) of the 2-torus: (t1,t2) -> t1^a t2^b.
struct Character {
    int64_t a = 0;
    int64_t b = 0;

    friend auto operator<=>(const Character&, const Character&) = default;

    Character operator+(const Character& o) const { return {a + o.a, b + o.b}; }
    Character operator-(const Character& o) const { return {a - o.a, b - o.b}; }
    Character operator-() const { return {-a, -b}; }
    Character operator*(int64_t k) const { return {a * k, b * k}; }
    bool is_zero() const { return a == 0 && b == 0; }

    /// Divide out the gcd and make the first nonzero coordinate positive.
    Character primitive() const {
        if (is_zero()) throw std::invalid_argument("primitive(): zero character");
        int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
        int64_t pa = a / g, pb = b / g;
        if (pa < 0 || (pa == 0 && pb < 0)) { pa = -pa; pb = -pb; }
        return {pa, pb};
    }

    /// True iff this lies on the line spanned by o (both nonzero).
    bool proportional(const Character& o) const {
        return a * o.b - b * o.a == 0;
    }

    int64_t pair(const Character& lambda) const { return a * lambda.a + b * lambda.b; }

    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Exponent pair of a monomial t1^i t2^j.
struct Exponent {
    int64_t i = 0;
    int64_t j = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
    int64_t degree() const { return i + j; }
};

/// Sparse bivariate polynomial over Q in t1, t2.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c) { if (c != 0) terms_[{0, 0}] = c; }
    Polynomial(int64_t c) : Polynomial(Rational(c)) {}

    static Polynomial monomial(int64_t i, int64_t j, const Rational& c = 1) {
        Polynomial p;
        if (c != 0) p.terms_[{i, j}] = c;
        return p;
    }

    /// The linear form a*t1 + b*t2 of a character.
    static Polynomial linear_form(const Character& chi) {
        Polynomial p;
        if (chi.a != 0) p.terms_[{1, 0}] = chi.a;
        if (chi.b != 0) p.terms_[{0, 1}] = chi.b;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Max total degree, -1 for the zero polynomial.
    int64_t degree() const {
        int64_t d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int64_t d = terms_.begin()->first.degree();
        for (const auto& [e, c] : terms_)
            if (e.degree() != d) return false;
        return true;
    }

    Rational coeff(int64_t i, int64_t j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial p;
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                p.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
        return p;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const {
        Polynomial p;
        if (c == 0) return p;
        for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
        return p;
    }

    Polynomial pow(int64_t n) const {
        if (n < 0) throw std::invalid_argument("pow(): negative exponent");
        Polynomial r(1), base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// d/dt1^? directional derivative along vector (u,v) in the t-plane.
    Polynomial directional_derivative(int64_t u, int64_t v) const {
        Polynomial p;
        for (const auto& [e, c] : terms_) {
            if (e.i > 0 && u != 0) p.add_term({e.i - 1, e.j}, c * e.i * u);
            if (e.j > 0 && v != 0) p.add_term({e.i, e.j - 1}, c * e.j * v);
        }
        return p;
    }

    /// Substitute t1 = x*s, t2 = y*s; returns dense coefficient list in s.
    std::vector<Rational> restrict_to_ray(int64_t x, int64_t y) const {
        std::vector<Rational> out;
        for (const auto& [e, c] : terms_) {
            size_t d = static_cast<size_t>(e.degree());
            if (out.size() <= d) out.resize(d + 1);
            Integer xi = 1, yj = 1;
            for (int64_t k = 0; k < e.i; ++k) xi *= x;
            for (int64_t k = 0; k < e.j; ++k) yj *= y;
            out[d] += c * xi * yj;
        }
        return out;
    }

    /// Canonical text: graded-lex order with t1 > t2, leading term first.
    std::string str() const;

private:
    void add_term(const Exponent& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

/// e_j of the linear forms of the given characters.
Polynomial elementary_symmetric(const std::vector<Character>& chars, size_t j);

/// True iff the linear form of chi, to the k-th power, divides f exactly.
bool divisible_by_linear_power(const Polynomial& f, const Character& chi, int64_t k);

}  // namespace hilb
