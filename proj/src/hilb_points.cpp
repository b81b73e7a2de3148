#include <hilb/hilb_points.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hilb {

int64_t HilbFixedPoint::total() const {
    int64_t t = 0;
    for (const auto& [id, e] : parts) t += e.colength();
    return t;
}

std::string HilbFixedPoint::label() const {
    if (parts.empty()) return "()";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : parts) {
        if (!first) os << ";";
        first = false;
        os << "p" << (id + 1) << ":" << e.str();
    }
    return os.str();
}

std::vector<HilbFixedPoint> enumerate_fixed_points(const ToricSurface& s, int64_t d) {
    if (d < 0) throw std::invalid_argument("enumerate_fixed_points: negative length");
    size_t n = s.fixed_points().size();
    std::vector<HilbFixedPoint> out;
    HilbFixedPoint cur;
    std::function<void(size_t, int64_t)> rec = [&](size_t id, int64_t remaining) {
        if (id == n) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int64_t m = 0; m <= remaining; ++m) {
            for (const Staircase& e : enumerate_staircases(m)) {
                if (m > 0) cur.parts[id] = e;
                rec(id + 1, remaining - m);
                cur.parts.erase(id);
            }
        }
    };
    rec(0, d);
    return out;
}

TangentRep tangent_representation(const ToricSurface& s, const HilbFixedPoint& p) {
    TangentRep rep;
    for (const auto& [id, e] : p.parts) {
        const SurfacePoint& sp = s.fixed_points()[id];
        for (const Character& chi : tangent_characters(e, sp.chi_x, sp.chi_y))
            rep.weights.push_back(chi);
    }
    std::sort(rep.weights.begin(), rep.weights.end());
    return rep;
}

std::vector<Character> tangent_oracle(const Staircase& e, const Character& chi_x,
                                      const Character& chi_y, int64_t /*bound*/) {
    if (e.empty()) throw std::invalid_argument("tangent_oracle: empty staircase");
    std::vector<Cell> gens = clefts(e);  // x ascending, y descending
    std::vector<Cell> members = e.cells();

    // Candidate shifts sigma with at least one generator landing inside E.
    std::set<std::pair<int64_t, int64_t>> shifts;
    for (const Cell& g : gens)
        for (const Cell& m : members) shifts.insert({m.a - g.a, m.b - g.b});

    std::vector<Character> out;
    for (const auto& [sa, sb] : shifts) {
        // phi(g_k) = c_k * x^(g_k + sigma), with c_k = 0 forced when the shifted
        // generator leaves E. Consecutive generators give one syzygy each; its
        // lcm is (a_{k+1}, b_k). Count the free coefficients.
        size_t p = gens.size();
        std::vector<int> var(p, 0);
        for (size_t k = 0; k < p; ++k)
            var[k] = e.contains({gens[k].a + sa, gens[k].b + sb}) ? 1 : 0;

        // Union-find over generators, with a sentinel class "zero" at index p.
        std::vector<size_t> parent(p + 1);
        std::iota(parent.begin(), parent.end(), size_t{0});
        std::function<size_t(size_t)> find = [&](size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](size_t x, size_t y) { parent[find(x)] = find(y); };

        for (size_t k = 0; k < p; ++k)
            if (!var[k]) unite(k, p);
        for (size_t k = 0; k + 1 < p; ++k) {
            Cell lcm{gens[k + 1].a, gens[k].b};
            if (e.contains({lcm.a + sa, lcm.b + sb})) unite(k, k + 1);
        }

        std::set<size_t> free_classes;
        size_t zero = find(p);
        for (size_t k = 0; k < p; ++k)
            if (find(k) != zero) free_classes.insert(find(k));

        Character chi = chi_x * sa + chi_y * sb;
        for (size_t r = 0; r < free_classes.size(); ++r) out.push_back(chi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial euler_class(const TangentRep& rep) {
    Polynomial prod = Polynomial::monomial(0, 0, 1);
    for (const Character& chi : rep.weights) {
        if (chi.is_zero()) throw std::domain_error("euler_class: zero tangent weight");
        prod = prod * Polynomial::linear_form(chi);
    }
    return prod;
}

std::vector<size_t> betti_bb(const ToricSurface& s, int64_t d, const Character& lambda) {
    std::vector<size_t> betti(static_cast<size_t>(4 * d + 1), 0);
    for (const HilbFixedPoint& p : enumerate_fixed_points(s, d)) {
        TangentRep rep = tangent_representation(s, p);
        size_t positive = 0;
        for (const Character& chi : rep.weights) {
            int64_t v = chi.pair(lambda);
            if (v == 0)
                throw std::domain_error("betti_bb: lambda not generic, tangent weight (" +
                                        std::to_string(chi.a) + "," + std::to_string(chi.b) +
                                        ") vanishes at " + p.label());
            if (v > 0) ++positive;
        }
        ++betti[2 * positive];
    }
    return betti;
}

}  // namespace hilb
