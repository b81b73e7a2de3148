#include <hilb/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace hilb {

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // Graded-lex with t1 > t2, leading term first: sort by (degree desc, i desc).
    std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
        return a.first.i > b.first.i;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = e.i != 0 || e.j != 0;
        bool need_coeff = !has_var || ac != 1;
        if (need_coeff) os << to_string(ac);
        if (need_coeff && has_var) os << "*";
        if (e.i != 0) {
            os << "t1";
            if (e.i != 1) os << "^" << e.i;
        }
        if (e.i != 0 && e.j != 0) os << "*";
        if (e.j != 0) {
            os << "t2";
            if (e.j != 1) os << "^" << e.j;
        }
    }
    return os.str();
}

Polynomial elementary_symmetric(const std::vector<Character>& chars, size_t j) {
    if (j > chars.size())
        throw std::invalid_argument("elementary_symmetric: index out of range");
    // e[k] after processing a prefix of the character list.
    std::vector<Polynomial> e(j + 1);
    e[0] = Polynomial(1);
    for (const Character& chi : chars) {
        Polynomial lf = Polynomial::linear_form(chi);
        for (size_t k = std::min(j, e.size() - 1); k >= 1; --k)
            e[k] += e[k - 1] * lf;
    }
    return e[j];
}

bool divisible_by_linear_power(const Polynomial& f, const Character& chi, int64_t k) {
    if (chi.is_zero()) throw std::invalid_argument("divisible_by_linear_power: zero form");
    if (k < 0) throw std::invalid_argument("divisible_by_linear_power: negative power");
    if (k == 0) return true;
    if (f.is_zero()) return true;
    Character p = chi.primitive();
    // f is divisible by (a*t1+b*t2)^k iff the directional derivatives of order
    // < k transverse to the line a*t1+b*t2=0 all vanish on that line. The line
    // is parametrised by (t1,t2) = (b, -a) s.
    Polynomial g = f;
    for (int64_t r = 0; r < k; ++r) {
        for (const Rational& c : g.restrict_to_ray(p.b, -p.a))
            if (c != 0) return false;
        if (r + 1 < k) g = g.directional_derivative(p.a, p.b);
    }
    return true;
}

}  // namespace hilb
