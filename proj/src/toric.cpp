#include <hilb/toric.hpp>

#include <algorithm>
#include <stdexcept>

namespace hilb {

namespace {

int64_t det2(const Character& u, const Character& v) { return u.a * v.b - u.b * v.a; }

}  // namespace

ToricSurface::ToricSurface(std::vector<Character> rays, std::string name)
    : name_(std::move(name)), rays_(std::move(rays)) {
    size_t n = rays_.size();
    if (n < 3) throw std::invalid_argument("ToricSurface: a complete fan needs >= 3 rays");
    for (const Character& r : rays_)
        if (r.is_zero() || std::gcd(std::abs(r.a), std::abs(r.b)) != 1)
            throw std::invalid_argument("ToricSurface: rays must be primitive");

    // Normalize to counterclockwise order.
    int64_t d0 = det2(rays_[0], rays_[1]);
    if (d0 < 0) std::reverse(rays_.begin(), rays_.end());

    for (size_t i = 0; i < n; ++i) {
        const Character& u = rays_[i];
        const Character& v = rays_[(i + 1) % n];
        int64_t d = det2(u, v);
        if (d != 1)
            throw std::invalid_argument(
                "ToricSurface: consecutive rays must be a positively oriented lattice basis "
                "(smooth complete fan)");
        SurfacePoint p;
        p.id = i;
        p.chi_x = {v.b, -v.a};   // dual basis of (u, v)
        p.chi_y = {-u.b, u.a};
        p.name = "p" + std::to_string(i + 1);
        points_.push_back(p);
    }

    for (size_t j = 0; j < n; ++j) {
        SurfaceLine l;
        l.id = j;
        size_t prev = (j + n - 1) % n;
        l.endpoint[0] = prev;              // cone (r_{j-1}, r_j): line along its x-axis
        l.endpoint[1] = j;                 // cone (r_j, r_{j+1}): line along its y-axis
        l.direction_at[0] = points_[prev].chi_x;
        l.direction_at[1] = points_[j].chi_y;
        if (!(l.direction_at[0] + l.direction_at[1]).is_zero())
            throw std::logic_error("ToricSurface: line direction characters must be opposite");
        l.name = "l" + std::to_string(j + 1);
        lines_.push_back(l);
    }
}

ToricSurface ToricSurface::p2() {
    // Ray order chosen so the fixed points come out as p1=(1:0:0), p2=(0:1:0),
    // p3=(0:0:1) with the chart at p3 carrying characters (1,0), (0,1).
    return ToricSurface({{0, 1}, {-1, -1}, {1, 0}}, "p2");
}

ToricSurface ToricSurface::p1xp1() {
    return ToricSurface({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, "p1xp1");
}

ToricSurface ToricSurface::hirzebruch(int64_t a) {
    if (a < 0) throw std::invalid_argument("hirzebruch: parameter must be >= 0");
    return ToricSurface({{1, 0}, {0, 1}, {-1, a}, {0, -1}}, "hirzebruch" + std::to_string(a));
}

ToricSurface ToricSurface::preset(const std::string& name) {
    if (name == "p2") return p2();
    if (name == "p1xp1") return p1xp1();
    if (name.rfind("hirzebruch", 0) == 0 && name.size() > 10)
        return hirzebruch(std::stoll(name.substr(10)));
    throw std::invalid_argument("unknown surface preset: " + name);
}

SurfaceFixedLocus ToricSurface::fixed_locus(const Subtorus& sub) const {
    SurfaceFixedLocus out;
    for (const SurfaceLine& l : lines_)
        if (l.direction_at[0].proportional(sub.chi)) out.fixed_lines.push_back(l.id);
    for (const SurfacePoint& p : points_) {
        bool on_fixed_line = p.chi_x.proportional(sub.chi) || p.chi_y.proportional(sub.chi);
        if (!on_fixed_line) out.isolated_points.push_back(p.id);
    }
    return out;
}

size_t ToricSurface::line_axis_at(const SurfaceLine& line, size_t point_id) const {
    if (line.endpoint[0] == point_id) return 0;
    if (line.endpoint[1] == point_id) return 1;
    throw std::invalid_argument("line_axis_at: point is not an endpoint of the line");
}

}  // namespace hilb
