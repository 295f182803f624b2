#include "sofa/sofa.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace sofa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Inner-wall data of the sampled tangent hallways.
struct QuadrantTable {
    std::vector<double> a, c, s, co;

    QuadrantTable(const Cap &cap, int t_samples) {
        if (t_samples < 2) throw ValidationError("niche needs at least two angle samples");
        const auto n = static_cast<std::size_t>(t_samples);
        a.resize(n); c.resize(n); s.resize(n); co.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double t = cap.omega() * static_cast<double>(k) / static_cast<double>(n - 1);
            a[k] = cap.support(t) - 1.0;
            c[k] = cap.support(t + kHalfPi) - 1.0;
            s[k] = std::sin(t);
            co[k] = std::cos(t);
        }
    }

    // Top of the column of Q-(t_k) above abscissa x; -inf when the column is empty.
    double ceiling(std::size_t k, double x) const {
        double c1, c2;
        if (s[k] > 1e-15) c1 = (a[k] - x * co[k]) / s[k];
        else c1 = x * co[k] < a[k] ? kInf : -kInf;
        if (co[k] > 1e-15) c2 = (c[k] + x * s[k]) / co[k];
        else c2 = -x * s[k] < c[k] ? kInf : -kInf;
        return std::min(c1, c2);
    }

    double envelope(double x) const {
        double e = -kInf;
        for (std::size_t k = 0; k < a.size(); ++k) e = std::max(e, ceiling(k, x));
        return e;
    }
};

double brute_support(const std::vector<Vec2> &pts, double t) {
    const Vec2 u = unit_u(t);
    double m = -kInf;
    for (const auto &p : pts) m = std::max(m, dot(p, u));
    return m;
}

bool segments_touch(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2, double eps) {
    auto orient = [](Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); };
    auto on_segment = [&](Vec2 a, Vec2 b, Vec2 c) {
        return std::min(a.x, b.x) - eps <= c.x && c.x <= std::max(a.x, b.x) + eps &&
               std::min(a.y, b.y) - eps <= c.y && c.y <= std::max(a.y, b.y) + eps;
    };
    const double d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
    const double d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
        return true;
    if (std::abs(d1) <= eps && on_segment(q1, q2, p1)) return true;
    if (std::abs(d2) <= eps && on_segment(q1, q2, p2)) return true;
    if (std::abs(d3) <= eps && on_segment(p1, p2, q1)) return true;
    if (std::abs(d4) <= eps && on_segment(p1, p2, q2)) return true;
    return false;
}

} // namespace

std::string NicheRegion::to_csv() const {
    std::ostringstream out;
    out << "x,y_lower,y_upper\n";
    char buf[96];
    for (const auto &c : columns) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g\n", c.x, c.y_lower, c.y_upper);
        out << buf;
    }
    return out.str();
}

NicheRegion niche(const Cap &cap, int t_samples, int x_samples) {
    if (x_samples < 2) throw ValidationError("niche needs at least two slabs");
    const QuadrantTable q(cap, t_samples);
    const Fan fan{cap.omega()};
    const double x0 = -cap.support(kPi), x1 = cap.support(0.0);
    NicheRegion r;
    r.dx = (x1 - x0) / x_samples;
    r.columns.reserve(static_cast<std::size_t>(x_samples));
    for (int j = 0; j < x_samples; ++j) {
        const double x = x0 + (j + 0.5) * r.dx;
        const double lo = fan.floor_at(x);
        const double hi = std::max(lo, q.envelope(x));
        r.columns.push_back({x, lo, hi});
        r.area += (hi - lo) * r.dx;
    }
    return r;
}

double niche_ceiling(const Cap &cap, double x, int t_samples) { return QuadrantTable(cap, t_samples).envelope(x); }

bool niche_contained(const Cap &cap, int t_samples) {
    if (t_samples < 2) throw ValidationError("containment test needs at least two angle samples");
    const Fan fan{cap.omega()};
    const ConvexPolygon poly = cap.polygon();
    const double tol = kGeomTol * std::max(1.0, cap.samples().max_radius());
    for (int k = 0; k < t_samples; ++k) {
        const double t = cap.omega() * k / (t_samples - 1);
        const Vec2 x = inner_corner(t, cap.support(t), cap.support(t + kHalfPi));
        if (fan.contains_interior(x, 1e-12) && !poly.contains(x, tol)) return false;
    }
    return true;
}

SofaShape sofa_area(const Cap &cap, int t_samples, int x_samples) {
    SofaShape s;
    s.cap = cap;
    s.niche = niche(cap, t_samples, x_samples);
    s.area = cap.area() - s.niche.area;
    s.contained = niche_contained(cap, t_samples);
    return s;
}

SofaShape monotonize(const std::vector<double> &grid, const std::vector<double> &values, double omega, int t_samples,
                     int x_samples) {
    require_omega(omega);
    if (std::abs(omega - kHalfPi) <= kAngleTol) omega = kHalfPi;
    if (grid.size() != values.size()) throw ValidationError("grid and values differ in length");
    double p_omega = kInf, p_half = kInf, scale = 1.0;
    std::vector<double> j_angles;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = wrap_angle(grid[i]);
        if (!in_j_omega(t, omega)) continue;
        j_angles.push_back(kTwoPi - t <= kAngleTol ? 0.0 : t);
        scale = std::max(scale, std::abs(values[i]));
        if (same_angle(t, omega)) p_omega = values[i];
        if (same_angle(t, kHalfPi)) p_half = values[i];
    }
    if (std::abs(p_omega - 1.0) > kGeomTol || std::abs(p_half - 1.0) > kGeomTol)
        throw ValidationError("input is not in standard position (p(omega) = p(pi/2) = 1 required)");

    const double big = 10.0 + 4.0 * scale;
    std::vector<Vec2> poly = {{-big, -big}, {big, -big}, {big, big}, {-big, big}};
    poly = clip_halfplane(poly, unit_u(kPi + omega), 0.0);
    poly = clip_halfplane(poly, unit_u(1.5 * kPi), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = wrap_angle(grid[i]);
        if (in_j_omega(t, omega)) poly = clip_halfplane(poly, unit_u(t), values[i]);
    }
    if (poly.size() < 3) throw ValidationError("monotonized cap is empty");

    std::vector<double> g = j_angles;
    for (double t : {0.0, omega, kHalfPi, kHalfPi + omega, kPi + omega, 1.5 * kPi}) g.push_back(wrap_angle(t));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end(), [](double a, double b) { return b - a <= kAngleTol; }), g.end());
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = brute_support(poly, g[i]);
    const Cap cap = validate_cap(SupportSamples(g, v, omega), omega);
    return sofa_area(cap, t_samples, x_samples);
}

SofaShape monotonize(const SupportSamples &p, double omega, int t_samples, int x_samples) {
    return monotonize(p.grid(), p.values(), omega, t_samples, x_samples);
}

bool injectivity_check(const Polyline &path, const Fan &fan) {
    if (path.size() < 2) return false;
    for (const auto &q : path)
        if (!fan.contains(q, kGeomTol)) return false;
    double scale = 1.0;
    for (const auto &q : path) scale = std::max({scale, std::abs(q.x), std::abs(q.y)});
    const double eps = 1e-14 * scale * scale;
    const std::size_t m = path.size() - 1;
    for (std::size_t i = 0; i < m; ++i)
        if (norm(path[i + 1] - path[i]) <= 1e-14 * scale) return false;
    // Adjacent segments may only meet at their shared endpoint.
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Vec2 d1 = path[i + 1] - path[i], d2 = path[i + 2] - path[i + 1];
        if (std::abs(cross(d1, d2)) <= eps && dot(d1, d2) < 0.0) return false;
    }
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    auto lo = [&](std::size_t i) { return std::min(path[i].x, path[i + 1].x); };
    auto hi = [&](std::size_t i) { return std::max(path[i].x, path[i + 1].x); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lo(a) < lo(b); });
    for (std::size_t ii = 0; ii < m; ++ii) {
        const std::size_t i = order[ii];
        for (std::size_t jj = ii + 1; jj < m && lo(order[jj]) <= hi(i) + 1e-12 * scale; ++jj) {
            const std::size_t j = order[jj];
            if (i + 1 == j || j + 1 == i) continue;
            if (segments_touch(path[i], path[i + 1], path[j], path[j + 1], eps)) return false;
        }
    }
    return true;
}

double hallway_intersection_area(const std::vector<double> &thetas, const std::vector<Vec2> &corners) {
    if (thetas.size() != corners.size()) throw ValidationError("one corner per angle required");
    double span = 10.0;
    for (const auto &c : corners) span = std::max(span, 4.0 * (std::abs(c.x) + std::abs(c.y) + 2.0));
    std::vector<Vec2> p = {{-span, 0.0}, {span, 0.0}, {span, 1.0}, {-span, 1.0}};
    const std::size_t k = thetas.size();
    for (std::size_t i = 0; i < k; ++i) {
        const double t = thetas[i];
        p = clip_halfplane(p, unit_u(t), dot(corners[i], unit_u(t)) + 1.0);
        p = clip_halfplane(p, unit_v(t), dot(corners[i], unit_v(t)) + 1.0);
    }
    if (p.size() < 3) return 0.0;
    double area = shoelace(p);
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Vec2> q = p;
        int bits = 0;
        for (std::size_t i = 0; i < k && q.size() >= 3; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            ++bits;
            const double t = thetas[i];
            q = clip_halfplane(q, unit_u(t), dot(corners[i], unit_u(t)));
            q = clip_halfplane(q, unit_v(t), dot(corners[i], unit_v(t)));
        }
        if (q.size() < 3) continue;
        area += (bits % 2 == 1 ? -1.0 : 1.0) * shoelace(q);
    }
    return area;
}

double polygonal_bound(const std::vector<double> &thetas, const BoundSearch &search) {
    if (thetas.empty()) throw ValidationError("polygonal bound needs at least one angle");
    for (double t : thetas)
        if (!(t > 0.0 && t < kHalfPi)) throw ValidationError("hallway angles must lie in (0, pi/2)");
    const std::size_t k = thetas.size();
    const std::size_t dim = 2 * k - 1;
    // Parameters: y of the first corner, then (x, y) of the others; the first
    // corner's x is fixed because H is invariant under horizontal shifts.
    std::vector<double> lo(dim), hi(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        const bool is_y = d == 0 || (d - 1) % 2 == 1;
        lo[d] = is_y ? -2.0 : -4.0;
        hi[d] = is_y ? 4.0 : 4.0;
    }
    auto corners_of = [&](const std::vector<double> &z) {
        std::vector<Vec2> c(k);
        c[0] = {0.0, z[0]};
        for (std::size_t i = 1; i < k; ++i) c[i] = {z[2 * i - 1], z[2 * i]};
        return c;
    };
    auto f = [&](const std::vector<double> &z) { return hallway_intersection_area(thetas, corners_of(z)); };

    double step = search.step;
    const double per_dim = std::pow(static_cast<double>(search.budget), 1.0 / static_cast<double>(dim));
    for (std::size_t d = 0; d < dim; ++d) step = std::max(step, (hi[d] - lo[d]) / per_dim);
    std::vector<std::size_t> counts(dim);
    std::size_t total = 1;
    for (std::size_t d = 0; d < dim; ++d) {
        counts[d] = static_cast<std::size_t>(std::floor((hi[d] - lo[d]) / step)) + 1;
        total *= counts[d];
    }
    std::vector<std::pair<double, std::vector<double>>> best;
    std::vector<double> z(dim);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t r = idx;
        for (std::size_t d = 0; d < dim; ++d) {
            z[d] = lo[d] + step * static_cast<double>(r % counts[d]);
            r /= counts[d];
        }
        const double v = f(z);
        if (best.size() < 8 || v > best.back().first) {
            best.emplace_back(v, z);
            std::sort(best.begin(), best.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
            if (best.size() > 8) best.pop_back();
        }
    }
    double result = -kInf;
    for (auto [v, x] : best) {
        // Compass search with halving steps.
        double h = step;
        while (h > search.tol) {
            bool moved = false;
            for (std::size_t d = 0; d < dim; ++d) {
                for (double sgn : {1.0, -1.0}) {
                    std::vector<double> y = x;
                    y[d] += sgn * h;
                    const double fy = f(y);
                    if (fy > v + 1e-15) {
                        v = fy;
                        x = std::move(y);
                        moved = true;
                    }
                }
            }
            if (!moved) h *= 0.5;
        }
        result = std::max(result, v);
    }
    return result;
}

} // namespace sofa
