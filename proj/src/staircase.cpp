#include <hilb/staircase.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hilb {

Staircase::Staircase(std::vector<int64_t> heights) : heights_(std::move(heights)) {
    while (!heights_.empty() && heights_.back() == 0) heights_.pop_back();
    for (size_t a = 0; a < heights_.size(); ++a) {
        if (heights_[a] < 0 || (a > 0 && heights_[a] > heights_[a - 1]))
            throw std::invalid_argument("Staircase: heights must be weakly decreasing");
    }
}

Staircase Staircase::from_cells(const std::vector<Cell>& cells) {
    std::vector<int64_t> h;
    for (const Cell& c : cells) {
        if (c.a < 0 || c.b < 0) throw std::invalid_argument("Staircase: negative cell");
        if (static_cast<size_t>(c.a) >= h.size()) h.resize(static_cast<size_t>(c.a) + 1, 0);
        h[static_cast<size_t>(c.a)] = std::max(h[static_cast<size_t>(c.a)], c.b + 1);
    }
    Staircase s(h);  // throws if not weakly decreasing
    if (s.colength() != static_cast<int64_t>(cells.size()))
        throw std::invalid_argument("Staircase: cells are not closed under division");
    return s;
}

int64_t Staircase::colength() const {
    return std::accumulate(heights_.begin(), heights_.end(), int64_t{0});
}

std::vector<Cell> Staircase::cells() const {
    std::vector<Cell> out;
    for (int64_t a = 0; a < width(); ++a)
        for (int64_t b = 0; b < height(a); ++b) out.push_back({a, b});
    return out;
}

Staircase Staircase::transposed() const {
    std::vector<int64_t> h(static_cast<size_t>(max_height()), 0);
    for (int64_t b = 0; b < max_height(); ++b)
        for (int64_t a = 0; a < width(); ++a)
            if (contains({a, b})) h[static_cast<size_t>(b)] = a + 1;
    return Staircase(h);
}

std::string Staircase::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t a = 0; a < heights_.size(); ++a) {
        if (a) os << ",";
        os << heights_[a];
    }
    os << "]";
    return os.str();
}

Staircase Staircase::parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("Staircase::parse: expected [h1,h2,...]");
    std::vector<int64_t> h;
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) h.push_back(std::stoll(tok));
    return Staircase(h);
}

int64_t WeightedHilbertFunction::total() const {
    int64_t t = 0;
    for (const auto& [d, v] : values) t += v;
    return t;
}

std::string WeightedHilbertFunction::str() const {
    std::ostringstream os;
    os << "(" << wa << "," << wb << "):{";
    bool first = true;
    for (const auto& [d, v] : values) {
        if (!first) os << ",";
        first = false;
        os << d << ":" << v;
    }
    os << "}";
    return os.str();
}

bool ReversePlanePartition::is_monotone() const {
    for (const Cell& c : shape.cells()) {
        if (shape.contains({c.a + 1, c.b}) && at(c) > at({c.a + 1, c.b})) return false;
        if (shape.contains({c.a, c.b + 1}) && at(c) > at({c.a, c.b + 1})) return false;
    }
    return true;
}

std::string ReversePlanePartition::str() const {
    std::ostringstream os;
    for (int64_t b = shape.max_height() - 1; b >= 0; --b) {
        bool first = true;
        for (int64_t a = 0; a < shape.width() && shape.contains({a, b}); ++a) {
            if (!first) os << " ";
            first = false;
            os << at({a, b});
        }
        if (b > 0) os << "\n";
    }
    return os.str();
}

std::vector<Staircase> enumerate_staircases(int64_t n) {
    if (n < 0) throw std::invalid_argument("enumerate_staircases: negative size");
    std::vector<Staircase> out;
    std::vector<int64_t> cur;
    std::function<void(int64_t, int64_t)> rec = [&](int64_t remaining, int64_t maxpart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int64_t p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> clefts(const Staircase& e) {
    std::vector<Cell> out;
    for (int64_t a = 0; a <= e.width(); ++a) {
        int64_t b = e.height(a);
        bool left_ok = a == 0 || e.contains({a - 1, b});
        bool below_ok = b == 0 || e.contains({a, b - 1});
        if (left_ok && below_ok) out.push_back({a, b});
    }
    return out;
}

std::vector<CleftCouple> cleft_couples(const Staircase& e) {
    if (e.empty()) throw std::invalid_argument("cleft_couples: empty staircase");
    std::vector<Cell> gens = clefts(e);
    size_t p = gens.size();

    // An x-couple (c_k, m) with shift s = m - c_k exists iff the lcm of c_k and
    // c_{k+1} shifted by s leaves the staircase, i.e. iff the syzygy between the
    // two generators puts no constraint on the value at c_k; symmetrically for
    // y-couples on the left neighbor. One basis vector per run of generators
    // tied together by syzygy constraints, provided no constraint reaches a
    // generator whose shift leaves N^2 or lands in the ideal (which pins the
    // whole run to zero). Emit one couple per free run.
    std::set<std::pair<int64_t, int64_t>> shifts;
    for (const Cell& g : gens)
        for (const Cell& m : e.cells()) shifts.insert({m.a - g.a, m.b - g.b});

    std::vector<CleftCouple> out;
    for (const auto& [sa, sb] : shifts) {
        std::vector<bool> present(p), tied(p - 1);
        for (size_t k = 0; k < p; ++k) present[k] = e.contains({gens[k].a + sa, gens[k].b + sb});
        for (size_t k = 0; k + 1 < p; ++k)
            tied[k] = e.contains({gens[k + 1].a + sa, gens[k].b + sb});

        for (size_t i = 0; i < p; ++i) {
            if (!present[i]) continue;
            size_t j = i;
            while (j + 1 < p && tied[j] && present[j + 1]) ++j;
            bool forced = (i > 0 && tied[i - 1]) || (j + 1 < p && tied[j]);
            if (!forced) {
                if (j + 1 < p) {
                    CleftAxis axis = (i == j && i > 0) ? CleftAxis::Both : CleftAxis::X;
                    out.push_back({gens[j], {gens[j].a + sa, gens[j].b + sb}, axis});
                } else if (i > 0) {
                    out.push_back({gens[i], {gens[i].a + sa, gens[i].b + sb}, CleftAxis::Y});
                } else {
                    throw std::logic_error("cleft_couples: run spans all generators");
                }
            }
            i = j;
        }
    }
    std::sort(out.begin(), out.end(), [](const CleftCouple& a, const CleftCouple& b) {
        return std::tie(a.cleft, a.member) < std::tie(b.cleft, b.member);
    });
    return out;
}

std::vector<Character> tangent_characters(const Staircase& e, const Character& chi_x,
                                          const Character& chi_y) {
    if (chi_x.a * chi_y.b - chi_x.b * chi_y.a == 0 ||
        std::abs(chi_x.a * chi_y.b - chi_x.b * chi_y.a) != 1)
        throw std::invalid_argument("tangent_characters: chart characters not a lattice basis");
    std::vector<Character> out;
    for (const CleftCouple& c : cleft_couples(e)) out.push_back(c.character(chi_x, chi_y));
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int64_t, int64_t> weighted_census(const Staircase& e, int64_t wa, int64_t wb) {
    std::map<int64_t, int64_t> h;
    for (const Cell& c : e.cells()) ++h[wa * c.a + wb * c.b];
    return h;
}

WeightedHilbertFunction weighted_hilbert_function(const Staircase& e, int64_t wa, int64_t wb) {
    if (wa < 0 || wb < 0 || (wa == 0 && wb == 0))
        throw std::invalid_argument("weighted_hilbert_function: weights must be in N^2 \\ {0}");
    WeightedHilbertFunction h;
    int64_t g = std::gcd(wa, wb);
    h.wa = wa / g;
    h.wb = wb / g;
    h.values = weighted_census(e, h.wa, h.wb);
    return h;
}

std::vector<Staircase> enumerate_ideals_with_hilbert_function(const WeightedHilbertFunction& h) {
    std::vector<Staircase> out;
    for (const Staircase& e : enumerate_staircases(h.total()))
        if (weighted_census(e, h.wa, h.wb) == h.values) out.push_back(e);
    return out;
}

std::optional<ReversePlanePartition> linkage(const Staircase& i, const Staircase& j) {
    if (i.colength() != j.colength())
        throw std::invalid_argument("linkage: colength mismatch");
    std::vector<Cell> support = j.cells();  // column-major
    std::set<Cell> unused;
    for (const Cell& c : i.cells()) unused.insert(c);
    ReversePlanePartition rpp;
    rpp.shape = j;

    std::function<bool(size_t)> dfs = [&](size_t idx) -> bool {
        if (idx == support.size()) return true;
        Cell c = support[idx];
        int64_t lo = 0;
        if (c.a > 0 && j.contains({c.a - 1, c.b})) lo = std::max(lo, rpp.at({c.a - 1, c.b}));
        if (c.b > 0) lo = std::max(lo, rpp.at({c.a, c.b - 1}));
        for (int64_t n = lo; n <= c.b; ++n) {
            Cell target{c.a + n, c.b - n};
            auto it = unused.find(target);
            if (it == unused.end()) continue;
            unused.erase(it);
            rpp.entries[c] = n;
            if (dfs(idx + 1)) return true;
            rpp.entries.erase(c);
            unused.insert(target);
        }
        return false;
    };
    if (dfs(0)) return rpp;
    return std::nullopt;
}

Staircase complement_in_box(const Staircase& i, int64_t n) {
    if (i.width() > n || i.max_height() > n)
        throw std::invalid_argument("complement_in_box: staircase does not fit the box");
    std::vector<Cell> cells;
    for (int64_t a = 0; a < n; ++a)
        for (int64_t b = 0; b < n; ++b)
            if (!i.contains({n - 1 - a, n - 1 - b})) cells.push_back({a, b});
    return Staircase::from_cells(cells);
}

Staircase complement(const Staircase& i) { return complement_in_box(i, i.colength()); }

bool incidence_necessary(const Staircase& i, const Staircase& iprime) {
    if (i.colength() != iprime.colength())
        throw std::invalid_argument("incidence_necessary: colength mismatch");
    if (!linkage(i, iprime)) return false;
    int64_t n = i.colength();
    return linkage(complement_in_box(i, n), complement_in_box(iprime, n)).has_value();
}

}  // namespace hilb
