// Command-line front end: every subcommand parses its inputs, calls the
// library, and prints one JSON document (or a plain-text report for the
// verification commands) on stdout. Diagnostics go to stderr; a failed
// verification exits nonzero.
#include <CLI11.hpp>
#include <json.hpp>

#include <hilb/p2_labels.hpp>
#include <hilb/relations_io.hpp>

#include <iostream>
#include <stdexcept>

using namespace hilb;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ToricSurface make_surface(const std::string& preset, const std::string& fan) {
    if (!fan.empty()) {
        json doc = json::parse(fan);
        std::vector<Character> rays;
        for (const auto& r : doc) rays.push_back({r.at(0).get<int64_t>(), r.at(1).get<int64_t>()});
        return ToricSurface(std::move(rays));
    }
    return ToricSurface::preset(preset);
}

json parts_json(const ToricSurface& s, const HilbFixedPoint& p) {
    json out = json::array();
    for (const auto& [id, part] : p.parts)
        out.push_back({{"point", s.fixed_points()[id].name}, {"staircase", part.str()}});
    return out;
}

json weights_json(const std::vector<Character>& weights) {
    json out = json::array();
    for (const Character& w : weights) out.push_back({w.a, w.b});
    return out;
}

json vector_json(const GradedVector& v) {
    json entries = json::object();
    for (const auto& [p, f] : v.entries) entries[std::to_string(p)] = f.str();
    return {{"degree", v.degree}, {"entries", entries}};
}

/// Degreewise bases as matrices of rational strings (monomial coordinates
/// t1^k, t1^{k-1}t2, ..., t2^k per fixed point).
json pieces_json(const GradedSubmodule& m) {
    json out = json::array();
    for (const RatMatrix& piece : m.pieces) {
        json rows = json::array();
        for (const RatRow& row : piece) {
            json r = json::array();
            for (const Rational& x : row) r.push_back(to_string(x));
            rows.push_back(std::move(r));
        }
        out.push_back(std::move(rows));
    }
    return out;
}

/// Smallest generic one-parameter subgroup of the form (1, k).
std::vector<size_t> betti_auto(const ToricSurface& s, int64_t d) {
    for (int64_t k = 2;; ++k) {
        try {
            return betti_bb(s, d, Character{1, k});
        } catch (const std::invalid_argument&) {
        }
    }
}

int run_verify(const ToricSurface& s, int64_t d, int64_t bound, const std::string& relations) {
    if (s.name() != "p2" || d != 3)
        throw std::invalid_argument("verify: label data exists only for --surface p2 --points 3");
    GradedSubmodule m = equivariant_chow(s, d, bound);
    P2ThreeLabels labels = p2_three_labels(s);
    RelationsSummary sum =
        verify_relations(m, load_relations(relations), labels.labels, labels.symmetries);
    for (const RelationReport& r : sum.reports)
        std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.relation << " under " << r.symmetry
                  << (r.witness.empty() ? "" : "  (" + r.witness + ")") << "\n";
    std::cout << (sum.all_passed ? "all relations hold" : "some relations fail") << "; relations "
              << (sum.complete ? "cut out exactly" : "do not cut out") << " the module up to degree "
              << bound << "\n";
    return sum.all_passed && sum.complete ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant Chow rings of Hilbert schemes of points on toric surfaces"};
    app.require_subcommand(1);

    std::string surface = "p2", fan, emit = "betti", relations, si, sj;
    int64_t d = 1, max_degree = -1, jobs = 1, box = -1;
    std::vector<int64_t> weights{1, 1}, hilbert;
    app.add_option("--jobs", jobs, "parallelism cap (the CLI itself is single-threaded)");

    auto add_surface = [&](CLI::App* cmd) {
        cmd->add_option("--surface", surface, "preset: p2, p1xp1, hirzebruch<a>");
        cmd->add_option("--fan", fan, "explicit fan as a JSON list of integer pairs");
    };

    CLI::App* cfix = app.add_subcommand("fixed-points", "T-fixed points of S^[d]");
    add_surface(cfix);
    cfix->add_option("--points", d)->required();

    CLI::App* ctan = app.add_subcommand("tangent", "tangent weights at every fixed point");
    add_surface(ctan);
    ctan->add_option("--points", d)->required();

    CLI::App* cgh = app.add_subcommand("graded-hilbert", "graded Hilbert scheme model");
    cgh->add_option("--weights", weights, "wa,wb")->delimiter(',')->expected(2);
    cgh->add_option("--hilbert", hilbert, "h0,h1,...")->delimiter(',')->required();
    cgh->add_option("--max-degree", max_degree);

    CLI::App* ccomp = app.add_subcommand("components", "fixed components under a subtorus");
    add_surface(ccomp);
    ccomp->add_option("--points", d)->required();
    std::vector<int64_t> chi{1, -1};
    ccomp->add_option("--chi", chi, "subtorus character a,b")->delimiter(',')->expected(2);

    CLI::App* cchow = app.add_subcommand("chow", "equivariant Chow module");
    add_surface(cchow);
    cchow->add_option("--points", d)->required();
    cchow->add_option("--max-degree", max_degree);
    cchow->add_option("--emit", emit)->check(CLI::IsMember({"module", "betti", "relations-check"}));
    cchow->add_option("--relations", relations, "relation file for --emit relations-check");

    CLI::App* cbetti = app.add_subcommand("betti", "Betti numbers of S^[d]");
    add_surface(cbetti);
    cbetti->add_option("--points", d)->required();

    CLI::App* cver = app.add_subcommand("verify", "check a congruence relation file");
    add_surface(cver);
    cver->add_option("--points", d)->required();
    cver->add_option("--max-degree", max_degree);
    cver->add_option("--relations", relations)->required();

    CLI::App* cinc = app.add_subcommand("incidence", "Schubert cell incidence necessary condition");
    cinc->add_option("--i", si, "staircase, e.g. [2,1]")->required();
    cinc->add_option("--iprime", sj)->required();

    CLI::App* ccompl = app.add_subcommand("complement", "rotated complement in a box");
    ccompl->add_option("--i", si)->required();
    ccompl->add_option("--box", box, "box size (default: colength)");

    CLI::App* clink = app.add_subcommand("linkage", "least linking reverse plane partition");
    clink->add_option("--i", si)->required();
    clink->add_option("--j", sj)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        ordered_json out;
        if (cfix->parsed() || ctan->parsed()) {
            ToricSurface s = make_surface(surface, fan);
            std::vector<HilbFixedPoint> pts = enumerate_fixed_points(s, d);
            out = {{"surface", s.name()}, {"d", d}, {"count", pts.size()}};
            json list = json::array();
            for (const HilbFixedPoint& p : pts) {
                json rec = {{"label", p.label()}, {"parts", parts_json(s, p)}};
                if (ctan->parsed())
                    rec["weights"] = weights_json(tangent_representation(s, p).weights);
                list.push_back(std::move(rec));
            }
            out["fixed_points"] = std::move(list);
        } else if (cgh->parsed()) {
            std::map<int64_t, int64_t> census;
            for (size_t i = 0; i < hilbert.size(); ++i)
                if (hilbert[i] != 0) census[static_cast<int64_t>(i)] = hilbert[i];
            GradedHilbModel model = GradedHilbModel::build(weights[0], weights[1], census);
            int64_t bound = max_degree >= 0 ? max_degree : 2 * model.total();
            GradedSubmodule m = module_M(model, {1, 0}, {0, 1}, bound);
            out = {{"weights", {model.wa, model.wb}},
                   {"embedding_degrees", model.embedding_degrees}};
            json fps = json::array();
            for (const Staircase& e : model.fixed_points) fps.push_back(e.str());
            out["fixed_points"] = std::move(fps);
            json gens = json::array();
            for (const GradedVector& g : module_generators(m)) gens.push_back(vector_json(g));
            out["generators"] = std::move(gens);
            json dims = json::array();
            for (int64_t k = 0; k <= bound; ++k) dims.push_back(m.piece_dim(k));
            out["piece_dims"] = std::move(dims);
        } else if (ccomp->parsed()) {
            ToricSurface s = make_surface(surface, fan);
            std::vector<HilbFixedPoint> pts = enumerate_fixed_points(s, d);
            Subtorus sub(Character{chi[0], chi[1]});
            out = {{"surface", s.name()}, {"d", d}, {"chi", {sub.chi.a, sub.chi.b}}};
            json comps = json::array();
            for (const ComponentModel& c : component_decomposition(s, d, sub)) {
                json jc = json::object();
                json pfs = json::array();
                for (const PointFactor& f : c.point_factors) {
                    json census = json::object();
                    for (const auto& [deg, v] : f.model.census) census[std::to_string(deg)] = v;
                    json fps = json::array();
                    for (const Staircase& e : f.model.fixed_points) fps.push_back(e.str());
                    pfs.push_back({{"point", s.fixed_points()[f.point_id].name},
                                   {"weights", {f.model.wa, f.model.wb}},
                                   {"census", census},
                                   {"fixed_points", fps}});
                }
                jc["point_factors"] = std::move(pfs);
                json lfs = json::array();
                for (const LineFactor& f : c.line_factors) {
                    json lengths = json::array();
                    for (const auto& [l, m] : f.lengths) lengths.push_back({l, m});
                    lfs.push_back({{"line", s.lines()[f.line_id].name},
                                   {"chi_line", {f.chi_line.a, f.chi_line.b}},
                                   {"lengths", lengths}});
                }
                jc["line_factors"] = std::move(lfs);
                json members = json::array();
                for (size_t g : c.global_of_tuple) members.push_back(pts[g].label());
                jc["members"] = std::move(members);
                comps.push_back(std::move(jc));
            }
            out["components"] = std::move(comps);
        } else if (cchow->parsed()) {
            ToricSurface s = make_surface(surface, fan);
            int64_t bound = max_degree >= 0 ? max_degree : 2 * d;
            if (emit == "relations-check") {
                if (relations.empty())
                    throw std::invalid_argument("chow: --emit relations-check needs --relations");
                return run_verify(s, d, bound, relations);
            }
            GradedSubmodule m = equivariant_chow(s, d, bound);
            if (emit == "betti") {
                out = {{"betti", quotient_betti(m)}};
            } else {
                out = {{"surface", s.name()}, {"d", d}, {"max_degree", bound}};
                json dims = json::array();
                for (int64_t k = 0; k <= bound; ++k) dims.push_back(m.piece_dim(k));
                out["piece_dims"] = std::move(dims);
                json gens = json::array();
                for (const GradedVector& g : module_generators(m)) gens.push_back(vector_json(g));
                out["generators"] = std::move(gens);
                out["pieces"] = pieces_json(m);
            }
        } else if (cbetti->parsed()) {
            ToricSurface s = make_surface(surface, fan);
            std::vector<size_t> bb = betti_auto(s, d);
            std::vector<size_t> even;
            for (size_t k = 0; k < bb.size(); k += 2) even.push_back(bb[k]);
            out = {{"surface", s.name()}, {"d", d}, {"betti", even}};
        } else if (cver->parsed()) {
            ToricSurface s = make_surface(surface, fan);
            return run_verify(s, d, max_degree >= 0 ? max_degree : 2 * d, relations);
        } else if (cinc->parsed()) {
            Staircase i = Staircase::parse(si), ip = Staircase::parse(sj);
            out = {{"i", i.str()},
                   {"iprime", ip.str()},
                   {"incidence_necessary", incidence_necessary(i, ip)}};
        } else if (ccompl->parsed()) {
            Staircase i = Staircase::parse(si);
            int64_t n = box >= 0 ? box : i.colength();
            out = {{"i", i.str()}, {"box", n}, {"complement", complement_in_box(i, n).str()}};
        } else if (clink->parsed()) {
            Staircase i = Staircase::parse(si), j = Staircase::parse(sj);
            std::optional<ReversePlanePartition> rpp = linkage(i, j);
            out = {{"i", i.str()}, {"j", j.str()}, {"linked", rpp.has_value()}};
            if (rpp) {
                json rows = json::array();
                for (int64_t b = rpp->shape.max_height(); b-- > 0;) {
                    json row = json::array();
                    for (int64_t a = 0; a < rpp->shape.width(); ++a)
                        if (rpp->shape.contains({a, b})) row.push_back(rpp->at({a, b}));
                    rows.push_back(std::move(row));
                }
                out["rpp"] = std::move(rows);
            } else {
                out["rpp"] = nullptr;
            }
        }
        std::cout << out.dump(2) << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
