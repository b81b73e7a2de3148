#include <hilb/chow.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hilb {

namespace {

/// A part at a line endpoint decomposes into "horizontal" subschemes: the one
/// at along-the-line position v sticks out of the line with transverse extent
/// equal to the v-th entry here. These lengths select the tuple digit.
std::vector<int64_t> horizontal_lengths(const Staircase& e, size_t along_axis) {
    if (along_axis == 0) return e.heights();  // along = x: column a, transverse = y
    return e.transposed().heights();          // along = y: row b, transverse = x
}

/// Number of cells per transverse level; a horizontal of length l contributes
/// one cell to each level 0..l-1, so the component invariant (the multiset of
/// horizontal lengths) is the difference sequence of these counts.
std::vector<int64_t> transverse_counts(const Staircase& e, size_t along_axis) {
    if (along_axis == 0) return e.transposed().heights();
    return e.heights();
}

std::map<int64_t, int64_t> line_level_key(const ToricSurface& s, const SurfaceLine& line,
                                          const HilbFixedPoint& p) {
    std::map<int64_t, int64_t> levels;
    for (size_t end = 0; end < 2; ++end) {
        Staircase part = p.part(line.endpoint[end]);
        std::vector<int64_t> prof =
            transverse_counts(part, s.line_axis_at(line, line.endpoint[end]));
        for (size_t v = 0; v < prof.size(); ++v) levels[static_cast<int64_t>(v)] += prof[v];
    }
    return levels;
}

using ComponentKey =
    std::pair<std::vector<std::map<int64_t, int64_t>>, std::vector<std::map<int64_t, int64_t>>>;

}  // namespace

size_t ComponentModel::tuple_count() const {
    size_t n = 1;
    for (size_t r : radices) n *= r;
    return n;
}

std::vector<Subtorus> relevant_subtori(const ToricSurface& s, int64_t d) {
    std::set<Character> prim;
    for (const HilbFixedPoint& p : enumerate_fixed_points(s, d))
        for (const Character& chi : tangent_representation(s, p).weights)
            prim.insert(chi.primitive());
    std::vector<Subtorus> out;
    for (const Character& chi : prim) out.emplace_back(chi);
    return out;
}

std::vector<ComponentModel> component_decomposition(const ToricSurface& s, int64_t d,
                                                    const Subtorus& sub) {
    Character lambda = sub.lambda();
    SurfaceFixedLocus locus = s.fixed_locus(sub);
    std::vector<HilbFixedPoint> global = enumerate_fixed_points(s, d);

    std::map<ComponentKey, std::vector<size_t>> groups;
    for (size_t g = 0; g < global.size(); ++g) {
        ComponentKey key;
        for (size_t w : locus.isolated_points) {
            const SurfacePoint& sp = s.fixed_points()[w];
            key.first.push_back(weighted_census(global[g].part(w), sp.chi_x.pair(lambda),
                                                sp.chi_y.pair(lambda)));
        }
        for (size_t l : locus.fixed_lines)
            key.second.push_back(line_level_key(s, s.lines()[l], global[g]));
        groups[key].push_back(g);
    }

    std::vector<ComponentModel> out;
    for (const auto& [key, members] : groups) {
        ComponentModel c;
        for (size_t i = 0; i < locus.isolated_points.size(); ++i) {
            size_t w = locus.isolated_points[i];
            const SurfacePoint& sp = s.fixed_points()[w];
            PointFactor f;
            f.point_id = w;
            f.model = GradedHilbModel::build(sp.chi_x.pair(lambda), sp.chi_y.pair(lambda),
                                             key.first[i]);
            c.radices.push_back(f.model.fixed_points.size());
            c.point_factors.push_back(std::move(f));
        }
        for (size_t i = 0; i < locus.fixed_lines.size(); ++i) {
            const SurfaceLine& line = s.lines()[locus.fixed_lines[i]];
            LineFactor f;
            f.line_id = line.id;
            f.chi_line = line.direction_at[0];
            const std::map<int64_t, int64_t>& levels = key.second[i];
            auto count = [&](int64_t v) {
                auto it = levels.find(v);
                return it == levels.end() ? int64_t{0} : it->second;
            };
            int64_t max_level = levels.empty() ? 0 : levels.rbegin()->first + 1;
            for (int64_t l = max_level; l >= 1; --l) {
                int64_t m = count(l - 1) - count(l);
                if (m < 0) throw std::logic_error("component_decomposition: bad level profile");
                if (m > 0) {
                    f.lengths.push_back({l, m});
                    c.radices.push_back(static_cast<size_t>(m) + 1);
                }
            }
            c.line_factors.push_back(std::move(f));
        }

        // Tuple index of each member; the map must be a bijection.
        c.global_of_tuple.assign(c.tuple_count(), size_t(-1));
        for (size_t g : members) {
            std::vector<size_t> digits;
            for (const PointFactor& f : c.point_factors) {
                Staircase part = global[g].part(f.point_id);
                auto it = std::find(f.model.fixed_points.begin(), f.model.fixed_points.end(),
                                    part);
                if (it == f.model.fixed_points.end())
                    throw std::logic_error("component_decomposition: part not a model fixed point");
                digits.push_back(static_cast<size_t>(it - f.model.fixed_points.begin()));
            }
            for (const LineFactor& f : c.line_factors) {
                const SurfaceLine& line = s.lines()[f.line_id];
                Staircase part0 = global[g].part(line.endpoint[0]);
                std::vector<int64_t> prof =
                    horizontal_lengths(part0, s.line_axis_at(line, line.endpoint[0]));
                for (const auto& [l, m] : f.lengths) {
                    int64_t j = static_cast<int64_t>(std::count(prof.begin(), prof.end(), l));
                    digits.push_back(static_cast<size_t>(j));
                }
            }
            size_t idx = 0;
            for (size_t i = 0; i < digits.size(); ++i) idx = idx * c.radices[i] + digits[i];
            if (c.global_of_tuple.at(idx) != size_t(-1))
                throw std::logic_error("component_decomposition: tuple collision");
            c.global_of_tuple[idx] = g;
        }
        for (size_t v : c.global_of_tuple)
            if (v == size_t(-1))
                throw std::logic_error("component_decomposition: unreached tuple");
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<GradedVector> projective_space_generators(int64_t m, const Character& chi) {
    if (m < 0) throw std::invalid_argument("projective_space_generators: negative dimension");
    std::vector<GradedVector> out;
    for (int64_t k = 0; k <= m; ++k) {
        std::map<size_t, Polynomial> entries;
        for (int64_t j = 0; j <= m; ++j) {
            Polynomial w = Polynomial::linear_form(chi * j).pow(k);
            if (!w.is_zero()) entries[static_cast<size_t>(j)] = w;
        }
        out.push_back(GradedVector::make(k, std::move(entries)));
    }
    return out;
}

namespace {

std::vector<GradedVector> tensor_products(
    const std::vector<std::vector<GradedVector>>& factor_generators,
    const std::vector<size_t>& global_of_tuple, size_t n_global, int64_t degree_bound) {
    size_t r = factor_generators.size();
    std::vector<size_t> radices;
    size_t tuples = 1;
    for (const auto& gens : factor_generators) {
        if (gens.empty()) throw std::invalid_argument("kunneth: factor without generators");
        size_t n_f = 0;
        for (const GradedVector& g : gens)
            for (const auto& [p, poly] : g.entries) n_f = std::max(n_f, p + 1);
        radices.push_back(n_f);
        tuples *= n_f;
    }
    if (global_of_tuple.size() != tuples)
        throw std::invalid_argument("kunneth: fixed-point map size mismatch");

    std::vector<GradedVector> out;
    std::vector<size_t> pick(r, 0);
    auto emit = [&]() {
        int64_t deg = 0;
        for (size_t f = 0; f < r; ++f) deg += factor_generators[f][pick[f]].degree;
        if (deg > degree_bound) return;
        std::map<size_t, Polynomial> entries;
        for (size_t t = 0; t < tuples; ++t) {
            size_t rest = t;
            Polynomial prod(1);
            for (size_t f = r; f-- > 0;) {
                size_t digit = rest % radices[f];
                rest /= radices[f];
                prod *= factor_generators[f][pick[f]].entry(digit);
                if (prod.is_zero()) break;
            }
            if (!prod.is_zero()) {
                size_t g = global_of_tuple[t];
                if (g >= n_global) throw std::invalid_argument("kunneth: bad global index");
                entries[g] = prod;
            }
        }
        out.push_back(GradedVector::make(deg, std::move(entries)));
    };
    auto rec = [&](auto&& self, size_t f) -> void {
        if (f == r) {
            emit();
            return;
        }
        for (pick[f] = 0; pick[f] < factor_generators[f].size(); ++pick[f]) self(self, f + 1);
    };
    rec(rec, 0);
    return out;
}

}  // namespace

GradedSubmodule kunneth_tensor(const std::vector<std::vector<GradedVector>>& factor_generators,
                               const std::vector<size_t>& global_of_tuple, size_t n_global,
                               int64_t degree_bound) {
    return generate_module(
        tensor_products(factor_generators, global_of_tuple, n_global, degree_bound), n_global,
        degree_bound);
}

GradedSubmodule module_N(const std::vector<std::pair<int64_t, int64_t>>& lengths,
                         const Character& chi_line, int64_t degree_bound) {
    std::vector<std::vector<GradedVector>> factors;
    size_t tuples = 1;
    for (const auto& [l, m] : lengths) {
        if (m < 1) throw std::invalid_argument("module_N: multiplicity must be >= 1");
        factors.push_back(projective_space_generators(m, chi_line));
        tuples *= static_cast<size_t>(m) + 1;
    }
    std::vector<size_t> identity(tuples);
    for (size_t t = 0; t < tuples; ++t) identity[t] = t;
    if (factors.empty()) return GradedSubmodule::full(1, degree_bound);
    return kunneth_tensor(factors, identity, tuples, degree_bound);
}

std::vector<GradedVector> component_generators(const ToricSurface& s, const ComponentModel& c,
                                               size_t n_global, int64_t degree_bound) {
    std::vector<std::vector<GradedVector>> factors;
    for (const PointFactor& f : c.point_factors) {
        const SurfacePoint& sp = s.fixed_points()[f.point_id];
        factors.push_back(
            module_generators(module_M(f.model, sp.chi_x, sp.chi_y, degree_bound)));
    }
    for (const LineFactor& f : c.line_factors)
        for (const auto& [l, m] : f.lengths)
            factors.push_back(projective_space_generators(m, f.chi_line));
    return tensor_products(factors, c.global_of_tuple, n_global, degree_bound);
}

GradedSubmodule image_subtorus(const ToricSurface& s, int64_t d, const Subtorus& sub,
                               int64_t degree_bound) {
    size_t n = enumerate_fixed_points(s, d).size();
    std::vector<GradedVector> gens;
    for (const ComponentModel& c : component_decomposition(s, d, sub))
        for (GradedVector& v : component_generators(s, c, n, degree_bound))
            gens.push_back(std::move(v));
    return generate_module(gens, n, degree_bound);
}

GradedSubmodule equivariant_chow(const ToricSurface& s, int64_t d, int64_t degree_bound) {
    std::vector<GradedSubmodule> images;
    for (const Subtorus& sub : relevant_subtori(s, d))
        images.push_back(image_subtorus(s, d, sub, degree_bound));
    if (images.empty())  // d = 0
        return GradedSubmodule::full(1, degree_bound);
    return piece_intersection(images);
}

bool congruence_membership(const GradedVector& alpha, const std::vector<GradedVector>& betas,
                           const std::vector<TangentRep>& tangents) {
    size_t n = tangents.size();
    std::vector<Polynomial> euler(n);
    std::map<Character, int64_t> modulus;
    for (size_t p = 0; p < n; ++p) {
        euler[p] = euler_class(tangents[p]);
        for (const Character& chi : tangents[p].weights) ++modulus[chi.primitive()];
    }
    // prefix[p] = e_0 ... e_{p-1}, suffix[p] = e_p ... e_{n-1}
    std::vector<Polynomial> prefix(n + 1, Polynomial(1)), suffix(n + 1, Polynomial(1));
    for (size_t p = 0; p < n; ++p) prefix[p + 1] = prefix[p] * euler[p];
    for (size_t p = n; p-- > 0;) suffix[p] = suffix[p + 1] * euler[p];

    for (const GradedVector& beta : betas) {
        Polynomial total;
        for (size_t p = 0; p < n; ++p) {
            Polynomial term = alpha.entry(p) * beta.entry(p);
            if (!term.is_zero()) total += term * prefix[p] * suffix[p + 1];
        }
        for (const auto& [chi, k] : modulus)
            if (!divisible_by_linear_power(total, chi, k)) return false;
    }
    return true;
}

namespace {

/// Value of the linear functional "coefficient of the k-th ray power of the
/// r-th directional derivative along chi" on a polynomial.
Rational modulus_functional(const Polynomial& f, const Character& chi, int64_t r) {
    Polynomial g = f;
    for (int64_t i = 0; i < r; ++i) g = g.directional_derivative(chi.a, chi.b);
    Rational val = 0;
    for (const Rational& c : g.restrict_to_ray(chi.b, -chi.a)) val += c;
    return val;
}

struct ResolvedRelation {
    std::string relation, symmetry;
    std::vector<std::pair<size_t, Rational>> terms;
    std::vector<std::pair<Character, int64_t>> modulus;
};

}  // namespace

RelationsSummary verify_relations(const GradedSubmodule& m, const std::vector<RelationSpec>& rels,
                                  const std::map<std::string, size_t>& labels,
                                  const std::vector<LabelSymmetry>& symmetries) {
    std::vector<ResolvedRelation> resolved;
    for (const LabelSymmetry& sym : symmetries)
        for (const RelationSpec& r : rels) {
            ResolvedRelation rr;
            rr.relation = r.name;
            rr.symmetry = sym.name;
            for (const auto& [label, coeff] : r.terms) {
                auto it = labels.find(label);
                if (it == labels.end())
                    throw std::invalid_argument("verify_relations: unknown label " + label);
                rr.terms.push_back({sym.fixed_point_image.at(it->second), coeff});
            }
            for (const auto& [chi, k] : r.modulus) {
                Character img{sym.char_matrix[0][0] * chi.a + sym.char_matrix[0][1] * chi.b,
                              sym.char_matrix[1][0] * chi.a + sym.char_matrix[1][1] * chi.b};
                rr.modulus.push_back({img.primitive(), k});
            }
            resolved.push_back(std::move(rr));
        }

    RelationsSummary summary;
    summary.all_passed = true;
    for (const ResolvedRelation& rr : resolved) {
        RelationReport rep;
        rep.relation = rr.relation;
        rep.symmetry = rr.symmetry;
        rep.passed = true;
        for (int64_t k = 0; k <= m.degree_bound && rep.passed; ++k)
            for (const GradedVector& v : m.piece_basis(k)) {
                Polynomial f;
                for (const auto& [p, c] : rr.terms) f += v.entry(p).scaled(c);
                bool ok = true;
                for (const auto& [chi, pow] : rr.modulus)
                    ok = ok && divisible_by_linear_power(f, chi, pow);
                if (!ok) {
                    rep.passed = false;
                    std::ostringstream os;
                    os << "degree " << k << " basis vector fails";
                    rep.witness = os.str();
                    break;
                }
            }
        summary.all_passed = summary.all_passed && rep.passed;
        summary.reports.push_back(std::move(rep));
    }

    // Completeness: the submodule cut out by the passing relations must
    // coincide with m degreewise. (Failing entries — e.g. a rejected sign
    // reading kept in the data for the report — would cut too deep.)
    std::vector<ResolvedRelation> passing;
    for (size_t i = 0; i < resolved.size(); ++i)
        if (summary.reports[i].passed) passing.push_back(resolved[i]);
    summary.complete = true;
    size_t n = m.n_points;
    for (int64_t k = 0; k <= m.degree_bound && summary.complete; ++k) {
        size_t ncols = n * static_cast<size_t>(k + 1);
        RatMatrix constraints;
        for (const ResolvedRelation& rr : passing)
            for (const auto& [chi, pow] : rr.modulus)
                for (int64_t r = 0; r < pow; ++r) {
                    RatRow row(ncols, Rational(0));
                    bool nonzero = false;
                    for (const auto& [p, c] : rr.terms)
                        for (int64_t j = 0; j <= k; ++j) {
                            Rational val = modulus_functional(
                                Polynomial::monomial(k - j, j, c), chi, r);
                            if (val != 0) {
                                row[p * (k + 1) + static_cast<size_t>(j)] += val;
                                nonzero = true;
                            }
                        }
                    if (nonzero) constraints.push_back(std::move(row));
                }
        RatMatrix cut = kernel(constraints, ncols);
        summary.complete = (cut == m.pieces[static_cast<size_t>(k)]);
    }
    return summary;
}

}  // namespace hilb
