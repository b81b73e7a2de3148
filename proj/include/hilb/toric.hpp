#pragma once

#include <hilb/polynomial.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hilb {

/// A torus-fixed point of the surface: the 2-cone on rays (ray_index,
/// next ray), with the dual-basis chart characters of its two coordinates.
struct SurfacePoint {
    size_t id = 0;
    Character chi_x;  // character of the first chart coordinate
    Character chi_y;  // character of the second chart coordinate
    std::string name; // "p1", ...
};

/// The invariant line of one ray: joins the fixed points of the two adjacent
/// cones. direction_at[k] is the character of the line coordinate at
/// endpoint[k]; the two are negatives of each other.
struct SurfaceLine {
    size_t id = 0;
    size_t endpoint[2] = {0, 0};
    Character direction_at[2];
    std::string name;
};

/// One-codimensional subtorus T' = ker(chi), chi primitive with canonical sign.
struct Subtorus {
    Character chi;
    explicit Subtorus(const Character& c) : chi(c.primitive()) {}
    /// A primitive generator of the line chi = 0 (pairing with chi is zero).
    Character lambda() const { return Character{-chi.b, chi.a}; }
    friend auto operator<=>(const Subtorus&, const Subtorus&) = default;
};

struct SurfaceFixedLocus {
    std::vector<size_t> isolated_points;  // PFix, by point id
    std::vector<size_t> fixed_lines;      // LFix, by line id
};

class ToricSurface {
public:
    /// Rays must span a complete fan with smooth (unimodular) consecutive cones.
    explicit ToricSurface(std::vector<Character> rays, std::string name = "custom");

    static ToricSurface p2();
    static ToricSurface p1xp1();
    static ToricSurface hirzebruch(int64_t a);
    static ToricSurface preset(const std::string& name);

    const std::string& name() const { return name_; }
    const std::vector<Character>& rays() const { return rays_; }
    const std::vector<SurfacePoint>& fixed_points() const { return points_; }
    const std::vector<SurfaceLine>& lines() const { return lines_; }

    SurfaceFixedLocus fixed_locus(const Subtorus& sub) const;

    /// For a fixed point on a fixed line: which chart axis runs along the
    /// line (0 = x, 1 = y). Throws if the point is not an endpoint.
    size_t line_axis_at(const SurfaceLine& line, size_t point_id) const;

private:
    std::string name_;
    std::vector<Character> rays_;
    std::vector<SurfacePoint> points_;
    std::vector<SurfaceLine> lines_;
};

}  // namespace hilb
