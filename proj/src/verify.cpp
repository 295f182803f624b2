#include "sofa/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sofa/functional.hpp"
#include "sofa/hallway.hpp"
#include "sofa/maximizer.hpp"
#include "sofa/optimize.hpp"
#include "sofa/sofa.hpp"

namespace sofa {

namespace {

const double kA1Max = 1.0 + kPi * kPi / 8.0;
const double kInf = std::numeric_limits<double>::infinity();

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

ConvexPolygon random_polygon(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> count(3, 16);
    const Vec2 centre{2.0 * u(rng), 2.0 * u(rng)};
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

// Intersection of the vertical line at x with a convex polygon.
bool column_span(const ConvexPolygon &poly, double x, double &lo, double &hi) {
    const auto &v = poly.vertices();
    lo = kInf;
    hi = -kInf;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % v.size()];
        if ((a.x - x) * (b.x - x) > 0.0) continue;
        if (a.x == b.x) {
            lo = std::min({lo, a.y, b.y});
            hi = std::max({hi, a.y, b.y});
        } else {
            const double y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
            lo = std::min(lo, y);
            hi = std::max(hi, y);
        }
    }
    return lo <= hi;
}

// Connectivity of the rasterized cap minus its niche, 4-neighbour flood fill.
bool raster_connected(const Cap &cap, int res, int t_samples) {
    const ConvexPolygon poly = cap.polygon();
    double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
    for (Vec2 q : poly.vertices()) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    const Fan fan{cap.omega()};
    const double dx = (xmax - xmin) / res, dy = (ymax - ymin) / res;
    std::vector<char> free(static_cast<std::size_t>(res) * res, 0);
    for (int i = 0; i < res; ++i) {
        const double x = xmin + (i + 0.5) * dx;
        double lo, hi;
        if (!column_span(poly, x, lo, hi)) continue;
        const double floor = fan.floor_at(x), ceil = niche_ceiling(cap, x, t_samples);
        for (int j = 0; j < res; ++j) {
            const double y = ymin + (j + 0.5) * dy;
            const bool in_cap = y >= lo && y <= hi;
            const bool in_niche = y > floor && y < ceil;
            free[static_cast<std::size_t>(i) * res + j] = in_cap && !in_niche;
        }
    }
    int components = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < free.size(); ++s) {
        if (free[s] != 1) continue;
        ++components;
        free[s] = 2;
        stack.push_back(s);
        while (!stack.empty()) {
            const std::size_t c = stack.back();
            stack.pop_back();
            const int i = static_cast<int>(c / res), j = static_cast<int>(c % res);
            const int ni[4] = {i - 1, i + 1, i, i}, nj[4] = {j, j, j - 1, j + 1};
            for (int k = 0; k < 4; ++k) {
                if (ni[k] < 0 || ni[k] >= res || nj[k] < 0 || nj[k] >= res) continue;
                const std::size_t nb = static_cast<std::size_t>(ni[k]) * res + nj[k];
                if (free[nb] == 1) {
                    free[nb] = 2;
                    stack.push_back(nb);
                }
            }
        }
    }
    return components == 1;
}

Cap box_cap(double x0, double x1) {
    return cap_from_polygon(ConvexPolygon::from_vertices({{x0, 0.0}, {x1, 0.0}, {x1, 1.0}, {x0, 1.0}}), kHalfPi);
}

CheckResult check_maximizer_value(const SuiteConfig &cfg) {
    CheckResult r{1, "maximizer value", false, 0, 1e-4, 0, ""};
    const int n = cfg.full ? 2000 : 500;
    Stopwatch sw;
    const Cap k = build_maximizer({kHalfPi, n});
    const double v = a1(k, n);
    r.seconds = sw.seconds();
    r.value = std::abs(v - kA1Max);
    r.passed = r.value <= r.tolerance && r.seconds < 5.0;
    r.detail = "A1 = " + fmt(v) + " at n = m = " + std::to_string(n);
    return r;
}

CheckResult check_general_omega(const SuiteConfig &cfg) {
    CheckResult r{2, "general omega", false, 0, 1e-4, 0, ""};
    const int n = cfg.full ? 2000 : 500;
    Stopwatch sw;
    for (double om : {kPi / 6.0, kPi / 4.0, kPi / 3.0, kHalfPi}) {
        const double v = a1(build_maximizer({om, n}), n);
        r.value = std::max(r.value, std::abs(v - maximizer_value(om)));
        r.detail += (r.detail.empty() ? "" : ", ") + fmt(v);
    }
    r.seconds = sw.seconds();
    r.passed = r.value <= r.tolerance;
    return r;
}

CheckResult check_sofa_area(const SuiteConfig &cfg) {
    CheckResult r{3, "cut sofa area", false, 0, 2e-3, 0, ""};
    const int s = cfg.full ? 4096 : 1024;
    const Cap k = build_maximizer({kHalfPi, cfg.full ? 2000 : 500});
    Stopwatch sw;
    const SofaShape shape = sofa_area(k, s, s);
    r.seconds = sw.seconds();
    r.value = std::abs(shape.area - 2.2009);
    r.passed = r.value <= r.tolerance && r.seconds < 30.0 && shape.contained;
    r.detail = "area = " + fmt(shape.area) + " at " + std::to_string(s) + " samples";
    return r;
}

CheckResult check_width(const SuiteConfig &cfg) {
    CheckResult r{4, "width", false, 0, 1e-3, 0, ""};
    Stopwatch sw;
    const double w = width(build_maximizer({kHalfPi, cfg.full ? 2000 : 500}).samples(), 0.0);
    r.seconds = sw.seconds();
    r.value = std::abs(w - kPi);
    r.passed = r.value <= r.tolerance;
    r.detail = "width = " + fmt(w);
    return r;
}

CheckResult check_hammersley(const SuiteConfig &) {
    CheckResult r{5, "hammersley bound", false, 0, 1e-3, 0, ""};
    Stopwatch sw;
    const double b = polygonal_bound({kPi / 4.0});
    r.seconds = sw.seconds();
    r.value = std::abs(b - 2.0 * std::sqrt(2.0));
    r.passed = r.value <= r.tolerance;
    r.detail = "bound = " + fmt(b);
    return r;
}

CheckResult check_certificate(const SuiteConfig &cfg) {
    CheckResult r{6, "optimality certificate", false, 0, 1e-3, 0, ""};
    Stopwatch sw;
    const MaximizerReport m = verify_maximizer({kHalfPi, cfg.full ? 2000 : 500}, 50, cfg.seed, 1e-3);
    r.seconds = sw.seconds();
    r.value = m.max_derivative;
    r.passed = m.max_derivative <= r.tolerance && m.max_trial_a1 <= 2.2337 + 1e-3;
    r.detail = "max |D| = " + fmt(m.max_derivative) + ", max trial A1 = " + fmt(m.max_trial_a1);
    return r;
}

CheckResult check_qp(const SuiteConfig &) {
    CheckResult r{7, "QP reproduction", false, 0, 1e-3, 0, ""};
    Stopwatch sw;
    const int n = 200;
    const QpProblem p = assemble(kHalfPi, n, build_maximizer({kHalfPi, n}));
    const QpSolution s = solve(p, uniform_start(p), 100000, 1e-3);
    r.seconds = sw.seconds();
    bool monotone = true;
    for (std::size_t i = 1; i < s.trace.size(); ++i)
        monotone = monotone && s.trace[i].objective >= s.trace[i - 1].objective - 1e-12;
    r.value = std::abs(s.value - kA1Max);
    r.passed = r.value <= r.tolerance && r.seconds < 60.0 && monotone && s.certificate <= 1e-3;
    r.detail = "value = " + fmt(s.value) + ", certificate = " + fmt(s.certificate) + ", iterations = " +
               std::to_string(s.iterations) + (monotone ? "" : ", not monotone");
    return r;
}

CheckResult check_bijection(const SuiteConfig &cfg) {
    const int n = cfg.full ? 500 : 100;
    CheckResult r{8, "measure bijection", false, 0, 1e-6 + 5.0 / n, 0, ""};
    Stopwatch sw;
    std::mt19937_64 rng(cfg.seed + 8);
    const double omegas[] = {kPi / 6.0, kPi / 4.0, kPi / 3.0, kHalfPi};
    for (int trial = 0; trial < 100; ++trial) {
        const double om = omegas[trial % 4];
        const std::vector<double> w = random_boundary_weights(om, n, rng);
        const std::vector<double> back = boundary_weights(cap_from_weights(w, om, n));
        for (std::size_t i = 0; i < w.size(); ++i) r.value = std::max(r.value, std::abs(w[i] - back[i]));
        const Cap k = random_cap(om, n, rng);
        const Cap k2 = cap_from_weights(boundary_weights(k), om, n);
        for (std::size_t i = 0; i < k.samples().size(); ++i)
            r.value = std::max(r.value, std::abs(k.samples().values()[i] - k2.samples().values()[i]));
    }
    r.seconds = sw.seconds();
    r.passed = r.value <= r.tolerance;
    r.detail = "n = " + std::to_string(n);
    return r;
}

// Both sides of the generalized Mamikon identity for the pedal curve of c.
double mamikon_gap(const ConvexPolygon &poly, Vec2 c, double t0, double t1, int m) {
    auto y = [&](double t) { return c + (poly.support(t) - dot(c, unit_u(t))) * unit_u(t); };
    auto f = [&](double t) { return dot(y(t) - poly.vertex_pair(t).second, unit_v(t)); };
    Polyline ys;
    for (int k = 0; k <= m; ++k) ys.push_back(y(t0 + (t1 - t0) * k / m));
    const Vec2 p = poly.vertex_pair(t0).second, q = poly.vertex_pair(t1).second;
    const double lhs = curve_area(ys) + segment_area(ys.back(), q) - curve_area(boundary_arc(poly, t0, t1)) -
                       segment_area(ys.front(), p);
    std::vector<double> br = {t0, t1};
    for (double t : poly.normals()) {
        const double d = ccw_distance(t0, t);
        for (double s : {t0 + d, t0 + d + kTwoPi})
            if (s > t0 && s < t1) br.push_back(s);
    }
    std::sort(br.begin(), br.end());
    double rhs = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i)
        rhs += gauss_legendre([&](double t) { const double v = f(t); return 0.5 * v * v; }, br[i], br[i + 1]);
    return std::abs(lhs - rhs);
}

CheckResult check_mamikon(const SuiteConfig &cfg) {
    const int m = cfg.full ? 2000 : 500;
    CheckResult r{9, "Mamikon identity", false, 0, 5.0 / m, 0, ""};
    Stopwatch sw;
    std::mt19937_64 rng(cfg.seed + 9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        const Vec2 c{4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0};
        const double t0 = kTwoPi * u(rng), span = 0.3 + (kTwoPi - 0.3) * u(rng);
        r.value = std::max(r.value, mamikon_gap(poly, c, t0, t0 + span, m));
    }
    const double sweep = mamikon_sweep(half_disk_cap(m));
    r.seconds = sw.seconds();
    r.passed = r.value <= r.tolerance && std::abs(sweep - 1.0) <= 1e-3;
    r.detail = "half-disk sweep = " + fmt(sweep);
    return r;
}

CheckResult check_polygon_identities(const SuiteConfig &cfg) {
    CheckResult r{10, "exact polygon identities", false, 0, 1e-9, 0, ""};
    Stopwatch sw;
    std::mt19937_64 rng(cfg.seed + 10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double area_gap = 0, vertex_gap = 0, gm_gap = 0, curve_gap = 0, beta_gap = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        const AngularMeasure sigma = surface_measure(poly);
        const double area = polygon_area(poly);
        area_gap = std::max(area_gap, std::abs(area - area_via_measure(SupportSamples::of_polygon(poly), sigma)) /
                                          std::max(1.0, area));

        // v+(t2) - v-(t1) against the edge sum over [t1, t2].
        const double t1 = kTwoPi * u(rng), span = kTwoPi * u(rng);
        const std::size_t pick = static_cast<std::size_t>(u(rng) * poly.edge_count()) % poly.edge_count();
        for (double a : {t1, poly.normals()[pick]}) {
            Vec2 sum;
            for (const auto &[t, w] : sigma.atoms)
                if (ccw_distance(a, t) <= span + kAngleTol || same_angle(a, t)) sum += w * unit_v(t);
            const Vec2 d = poly.vertex_pair(a + span).second - poly.vertex_pair(a).first;
            vertex_gap = std::max(vertex_gap, norm(d - sum));
        }

        const ConvexPolygon back = gauss_minkowski(sigma);
        if (back.vertices().size() != poly.vertices().size()) {
            gm_gap = kInf;
        } else {
            const Vec2 shift = poly.vertices()[0] - back.vertices()[0];
            for (std::size_t i = 0; i < back.vertices().size(); ++i)
                gm_gap = std::max(gm_gap, norm(back.vertices()[i] + shift - poly.vertices()[i]));
        }

        const double t = kTwoPi * u(rng);
        curve_gap = std::max(curve_gap, std::abs(curve_area(boundary_arc(poly, t, t + kTwoPi)) - area));
    }
    const double omegas[] = {kPi / 6.0, kPi / 3.0, kHalfPi};
    for (int trial = 0; trial < 30; ++trial) {
        const double om = omegas[trial % 3];
        const Cap k1 = random_cap(om, 40, rng), k2 = random_cap(om, 40, rng);
        const double lambda = u(rng);
        const std::vector<double> b1 = boundary_weights(k1), b2 = boundary_weights(k2);
        const std::vector<double> bb = boundary_weights(blend(k1, k2, lambda));
        for (std::size_t i = 0; i < bb.size(); ++i)
            beta_gap = std::max(beta_gap, std::abs(bb[i] - ((1.0 - lambda) * b1[i] + lambda * b2[i])));
    }
    r.seconds = sw.seconds();
    r.value = std::max({area_gap, vertex_gap, gm_gap, curve_gap, beta_gap});
    r.passed = r.value <= r.tolerance;
    r.detail = "shoelace " + fmt(area_gap) + ", vertex " + fmt(vertex_gap) + ", round trip " + fmt(gm_gap) +
               ", curve area " + fmt(curve_gap) + ", beta " + fmt(beta_gap);
    return r;
}

CheckResult check_derivatives(const SuiteConfig &cfg) {
    const double h = 1e-4;
    CheckResult r{11, "derivative checks", false, 0, 10.0 * h, 0, ""};
    Stopwatch sw;
    std::mt19937_64 rng(cfg.seed + 11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double omegas[] = {kPi / 6.0, kPi / 4.0, kPi / 3.0, kHalfPi};
    double d_gap = 0.0, a_gap = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double om = omegas[trial % 4];
        const Cap k1 = random_cap(om, 40, rng), k2 = random_cap(om, 40, rng);
        const Cap kh = blend(k1, k2, h);
        d_gap = std::max(d_gap, std::abs((a1_exact(kh) - a1_exact(k1)) / h - directional_derivative(k1, k2)));
        a_gap = std::max(a_gap, std::abs((kh.area() - k1.area()) / h - area_derivative(k1, k2)));
    }
    // Inner-corner velocity against a forward difference of the corner.
    const double dt = 1e-6;
    double c_ratio = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        double t = 0.0;
        for (;;) {
            t = kHalfPi * u(rng);
            bool clear = true;
            for (double nrm : poly.normals())
                for (double s : {t, t + kHalfPi})
                    clear = clear && ccw_distance(s, nrm) > 10.0 * dt && ccw_distance(nrm, s) > 10.0 * dt;
            if (clear) break;
        }
        auto corner = [&](double s) { return inner_corner(s, poly.support(s), poly.support(s + kHalfPi)); };
        const Vec2 fd = (1.0 / dt) * (corner(t + dt) - corner(t));
        double radius = 0.0;
        for (Vec2 q : poly.vertices()) radius = std::max(radius, norm(q));
        c_ratio = std::max(c_ratio, norm(fd - corner_derivative(poly, t, Side::Plus)) / (dt * (1.0 + radius)));
    }
    r.seconds = sw.seconds();
    r.value = std::max(d_gap, a_gap);
    r.passed = r.value <= r.tolerance && c_ratio <= 10.0;
    r.detail = "A1 " + fmt(d_gap) + ", area " + fmt(a_gap) + ", corner error / dt " + fmt(c_ratio);
    return r;
}

CheckResult check_structure(const SuiteConfig &cfg) {
    CheckResult r{12, "structure theorems", false, 0, 0, 0, ""};
    Stopwatch sw;
    std::mt19937_64 rng(cfg.seed + 12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::pair<std::string, Cap>> caps;
    caps.emplace_back("wide", box_cap(0.0, 100.0));
    caps.emplace_back("maximizer", build_maximizer({kHalfPi, 200}));
    for (double len : {1.0, 1.5, 2.0, 2.5, 3.5, 4.0, 6.0, 10.0})
        caps.emplace_back("box " + fmt(len), box_cap(-0.5 * len, 0.5 * len));
    const double omegas[] = {kHalfPi, kPi / 3.0, kPi / 4.0};
    for (int i = 0; caps.size() < 30; ++i) caps.emplace_back("random " + std::to_string(i), random_cap(omegas[i % 3], 12, rng));

    int disagreements = 0, wz_failures = 0, bound_failures = 0, injective = 0, contained_count = 0;
    const Cap &wide = caps[0].second, &kmax = caps[1].second;
    const bool wide_ok = !niche_contained(wide, 2048), kmax_ok = niche_contained(kmax, 2048);
    for (const auto &[name, cap] : caps) {
        const bool contained = niche_contained(cap, 2048);
        contained_count += contained;
        if (contained != raster_connected(cap, 1024, 1024)) {
            ++disagreements;
            r.detail += "containment disagrees on " + name + "; ";
        }
        for (int k = 1; k < 256; ++k) {
            const Wedge w = wedge(cap, cap.omega() * k / 256.0);
            if (w.w < -kGeomTol || w.z < -kGeomTol) ++wz_failures;
        }
        const Polyline path = rotation_path(cap.samples(), 1024);
        if (injectivity_check(path, Fan{cap.omega()})) {
            ++injective;
            // The sampled quadrant union misses about L^2 / (8 T) of the niche
            // for a path of length L, so the angle count follows the length.
            const double steps = std::ceil(polyline_length(path) / 0.005);
            const int t_samples = static_cast<int>(std::clamp(steps, 4096.0, 65536.0));
            if (sofa_area(cap, t_samples, 1024).area > a1_exact(cap) + 2e-3) {
                ++bound_failures;
                r.detail += "A > A1 on " + name + "; ";
            }
        }
    }
    // Monotonize twice on support values pushed outward.
    double idem_gap = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const double om = omegas[trial % 3];
        const Cap cap = random_cap(om, 12, rng);
        std::vector<double> values = cap.samples().values();
        const std::vector<double> &grid = cap.samples().grid();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const bool pinned = same_angle(grid[i], om) || same_angle(grid[i], kHalfPi);
            if (in_j_omega(grid[i], om) && !pinned) values[i] += 0.3 * u(rng);
        }
        const SofaShape once = monotonize(grid, values, om, 512, 512);
        const SofaShape twice = monotonize(once.cap.samples(), om, 512, 512);
        for (std::size_t i = 0; i < grid.size(); ++i)
            idem_gap = std::max(idem_gap, std::abs(once.cap.samples().values()[i] - twice.cap.samples().values()[i]));
        idem_gap = std::max(idem_gap, std::abs(once.area - twice.area));
    }
    r.seconds = sw.seconds();
    r.value = disagreements + wz_failures + bound_failures;
    r.passed = disagreements == 0 && wz_failures == 0 && bound_failures == 0 && idem_gap <= 1e-9 && wide_ok && kmax_ok;
    r.detail += std::to_string(caps.size()) + " caps, " + std::to_string(contained_count) + " contained, " +
                std::to_string(injective) + " injective, idempotence gap " +
                fmt(idem_gap) + (wide_ok ? "" : ", wide cap reported contained") +
                (kmax_ok ? "" : ", maximizer reported not contained");
    return r;
}

CheckResult check_ode(const SuiteConfig &cfg) {
    const int n = cfg.full ? 2000 : 500;
    CheckResult r{13, "ODE relations", false, 0, 10.0 / n, 0, ""};
    Stopwatch sw;
    for (double om : {kPi / 6.0, kPi / 4.0, kPi / 3.0, kHalfPi}) {
        const Cap k = build_maximizer({om, n});
        const std::vector<double> grid = j_omega_grid(om, n), w = boundary_weights(k);
        auto weight_at = [&](double t) {
            const auto it = std::lower_bound(grid.begin(), grid.end(), t - kAngleTol);
            return w[static_cast<std::size_t>(it - grid.begin())];
        };
        const double d = om / n;
        for (int c = 1; c + 1 < n; ++c) {
            const double a = c * d, b = (c + 1) * d, mid = 0.5 * (a + b);
            const ArmLengths la = arm_lengths(k.samples(), a), lb = arm_lengths(k.samples(), b);
            const double g_avg = 0.5 * (la.g_plus + lb.g_plus), h_avg = 0.5 * (la.h_plus + lb.h_plus);
            const double dg = (lb.g_plus - la.g_plus) / d, dh = (lb.h_plus - la.h_plus) / d;
            const double lower = weight_at(mid) / d, upper = weight_at(mid + kHalfPi) / d;
            r.value = std::max(r.value, std::abs(dg - (-lower + h_avg)));
            r.value = std::max(r.value, std::abs(dh - (upper - g_avg)));
        }
    }
    r.seconds = sw.seconds();
    r.passed = r.value <= r.tolerance;
    r.detail = "n = " + std::to_string(n);
    return r;
}

} // namespace

CheckResult run_check(int id, const SuiteConfig &cfg) {
    static const std::function<CheckResult(const SuiteConfig &)> checks[kCheckCount] = {
        check_maximizer_value, check_general_omega, check_sofa_area,        check_width,       check_hammersley,
        check_certificate,     check_qp,            check_bijection,        check_mamikon,     check_polygon_identities,
        check_derivatives,     check_structure,     check_ode};
    if (id < 1 || id > kCheckCount) throw ValidationError("no acceptance check " + std::to_string(id));
    try {
        return checks[id - 1](cfg);
    } catch (const std::exception &e) {
        CheckResult r;
        r.id = id;
        r.name = "check " + std::to_string(id);
        r.detail = std::string("exception: ") + e.what();
        return r;
    }
}

SuiteReport run_suite(const std::string &suite, std::uint64_t seed) {
    if (suite != "fast" && suite != "full") throw ValidationError("unknown suite '" + suite + "' (expected fast or full)");
    SuiteReport rep;
    rep.suite = suite;
    const SuiteConfig cfg{suite == "full", seed};
    for (int id = 1; id <= kCheckCount; ++id) rep.checks.push_back(run_check(id, cfg));
    return rep;
}

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::string SuiteReport::summary_line(const CheckResult &c) const {
    std::ostringstream os;
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": value " << fmt(c.value) << " (tol "
       << fmt(c.tolerance) << ")  " << c.detail;
    return os.str();
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult &c : checks) {
        j["checks"].push_back({{"id", c.id},
                               {"name", c.name},
                               {"passed", c.passed},
                               {"value", c.value},
                               {"tolerance", c.tolerance},
                               {"detail", c.detail}});
    }
    return j.dump(2);
}

} // namespace sofa
