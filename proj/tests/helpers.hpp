#pragma once

#include <random>
#include <vector>

#include "sofa/cap.hpp"
#include "sofa/convex.hpp"

namespace testing {

using namespace sofa;

inline ConvexPolygon unit_square() { return ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline ConvexPolygon box(double x0, double x1, double y0, double y1) {
    return ConvexPolygon::from_vertices({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

inline ConvexPolygon random_polygon(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> count(3, 14);
    const Vec2 centre{u(rng), u(rng)};
    for (;;) {
        std::vector<Vec2> pts;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) pts.push_back(centre + Vec2{u(rng), u(rng)});
        try {
            ConvexPolygon p = ConvexPolygon::hull(pts);
            if (p.edge_count() >= 3 && p.area() > 0.05) return p;
        } catch (const ValidationError &) {
        }
    }
}

// Unit square [0,1]^2 joined with the quarter disk of radius 1 at the origin
// in the second quadrant, sampled on cap_grid(pi/2, n).
inline Cap square_quarter_circle(int n) {
    std::vector<double> g = cap_grid(kHalfPi, n), v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double t = g[i];
        if (t <= kHalfPi) v[i] = std::cos(t) + std::sin(t);
        else if (t <= kPi + 1e-12) v[i] = 1.0;
        else v[i] = 0.0;
    }
    return validate_cap(SupportSamples(g, v, kHalfPi), kHalfPi);
}

inline Cap box_cap(double x0, double x1) { return cap_from_polygon(box(x0, x1, 0.0, 1.0), kHalfPi); }

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return a.size() == b.size() ? m : 1e300;
}

} // namespace testing
