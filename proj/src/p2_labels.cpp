#include <hilb/p2_labels.hpp>

#include <algorithm>
#include <stdexcept>

namespace hilb {

namespace {

S3Element compose(const S3Element& g, const S3Element& h, const std::string& name) {
    S3Element out;
    out.name = name;
    for (size_t i = 0; i < 3; ++i) out.perm[i] = g.perm[h.perm[i]];
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            out.mat[i][j] = g.mat[i][0] * h.mat[0][j] + g.mat[i][1] * h.mat[1][j];
    return out;
}

Character apply_mat(const S3Element& g, const Character& c) {
    return Character{g.mat[0][0] * c.a + g.mat[0][1] * c.b,
                    g.mat[1][0] * c.a + g.mat[1][1] * c.b};
}

}  // namespace

std::vector<S3Element> s3_p2() {
    S3Element id{"id", {0, 1, 2}, {{1, 0}, {0, 1}}};
    // (a,b) are coordinates in the chart at p3; swapping p1 and p2 swaps them,
    // while moving p3 inverts one coordinate against the hyperplane relation.
    S3Element s12{"s12", {1, 0, 2}, {{0, 1}, {1, 0}}};
    S3Element s13{"s13", {2, 1, 0}, {{-1, -1}, {0, 1}}};
    S3Element s23{"s23", {0, 2, 1}, {{1, 0}, {-1, -1}}};
    return {id, s12, s13, s23, compose(s13, s12, "s123"), compose(s12, s13, "s132")};
}

HilbFixedPoint apply_s3(const ToricSurface& s, const S3Element& g, const HilbFixedPoint& p) {
    const auto& pts = s.fixed_points();
    HilbFixedPoint out;
    for (const auto& [i, part] : p.parts) {
        size_t j = g.perm.at(i);
        Character cx = apply_mat(g, pts[i].chi_x), cy = apply_mat(g, pts[i].chi_y);
        if (cx == pts[j].chi_x && cy == pts[j].chi_y)
            out.parts[j] = part;
        else if (cx == pts[j].chi_y && cy == pts[j].chi_x)
            out.parts[j] = part.transposed();
        else
            throw std::logic_error("apply_s3: chart characters do not match at " + pts[j].name);
    }
    return out;
}

P2ThreeLabels p2_three_labels(const ToricSurface& s, const std::array<HilbFixedPoint, 5>& base,
                              const std::array<S3Element, 3>& subscripts) {
    std::vector<HilbFixedPoint> global = enumerate_fixed_points(s, 3);
    auto index_of = [&](const HilbFixedPoint& p) {
        auto it = std::find(global.begin(), global.end(), p);
        if (it == global.end())
            throw std::invalid_argument("p2_three_labels: not a fixed point: " + p.label());
        return static_cast<size_t>(it - global.begin());
    };

    P2ThreeLabels out;
    const std::string letters = "abcde";
    const std::array<std::string, 3> tags = {"12", "13", "23"};
    for (size_t i = 0; i < 5; ++i) {
        out.labels[std::string(1, letters[i])] = index_of(base[i]);
        for (size_t k = 0; k < 3; ++k)
            out.labels[letters[i] + tags[k]] = index_of(apply_s3(s, subscripts[k], base[i]));
    }
    for (const S3Element& g : s3_p2()) {
        LabelSymmetry sym;
        sym.name = g.name;
        for (const HilbFixedPoint& p : global)
            sym.fixed_point_image.push_back(index_of(apply_s3(s, g, p)));
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) sym.char_matrix[i][j] = g.mat[i][j];
        out.symmetries.push_back(std::move(sym));
    }
    return out;
}

P2ThreeLabels p2_three_labels(const ToricSurface& s) {
    // Base configurations in the chart at p3 = A^2: A, B, C, D supported at
    // the origin (C and D with their extra point at infinity, the reduced
    // point aligned with the length-2 part for C and off its line for D),
    // E the three coordinate points. Subscript sigma_{ij} exchanges the
    // i-th and j-th base points of the classical coordinates, in which the
    // origin of the chart is the first point: 12 <-> s13, 13 <-> s23,
    // 23 <-> s12 in fan numbering.
    HilbFixedPoint a{{{2, Staircase({2, 1})}}};
    HilbFixedPoint b{{{2, Staircase({1, 1, 1})}}};
    HilbFixedPoint c{{{2, Staircase({1, 1})}, {0, Staircase({1})}}};
    HilbFixedPoint d{{{2, Staircase({1, 1})}, {1, Staircase({1})}}};
    HilbFixedPoint e{{{0, Staircase({1})}, {1, Staircase({1})}, {2, Staircase({1})}}};
    std::vector<S3Element> g = s3_p2();
    return p2_three_labels(s, {a, b, c, d, e}, {g[2], g[3], g[1]});
}

}  // namespace hilb
