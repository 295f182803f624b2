#include "sofa/functional.hpp"

#include <algorithm>

namespace sofa {

namespace {

struct Piece {
    double a, b;
    Vec2 A, C; // A+(t), C+(t) on the open piece
};

std::vector<Piece> rotation_pieces(const SupportSamples &p) {
    const std::vector<double> br = rotation_breakpoints(p);
    std::vector<Piece> out;
    out.reserve(br.size());
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        const double m = 0.5 * (br[i] + br[i + 1]);
        out.push_back({br[i], br[i + 1], p.vertex_pair(m).second, p.vertex_pair(m + kHalfPi).second});
    }
    return out;
}

// Arm lengths on a piece from its fixed contact vertices.
double arm_g(const Piece &q, double t) { return dot(q.C - q.A, unit_v(t)); }
double arm_h(const Piece &q, double t) { return dot(q.A - q.C, unit_u(t)); }

bool right_angle(double omega) { return std::abs(omega - kHalfPi) <= kAngleTol; }

} // namespace

std::vector<double> rotation_breakpoints(const SupportSamples &p) {
    const double omega = p.omega();
    std::vector<double> br = {0.0, omega};
    for (double t : p.grid()) {
        if (t > kAngleTol && t < omega - kAngleTol) br.push_back(t);
        const double s = t - kHalfPi;
        if (s > kAngleTol && s < omega - kAngleTol) br.push_back(s);
    }
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end(), [](double a, double b) { return b - a <= kAngleTol; }), br.end());
    return br;
}

double rotation_path_area(const Cap &cap) {
    double s = 0.0;
    for (const Piece &q : rotation_pieces(cap.samples())) {
        s += gauss_legendre(
            [&](double t) {
                const Vec2 u = unit_u(t), v = unit_v(t);
                const double pt = dot(q.A, u), pq = dot(q.C, v);
                const double g = dot(q.C - q.A, v), h = dot(q.A - q.C, u);
                return 0.5 * ((pt - 1.0) * (h - 1.0) + (pq - 1.0) * (g - 1.0));
            },
            q.a, q.b);
    }
    return s;
}

double a1_exact(const Cap &cap) { return cap.area() - rotation_path_area(cap); }

double a1(const Cap &cap, int m) { return cap.area() - curve_area(rotation_path(cap.samples(), m)); }

BoundaryConstraints boundary_constraints(const AngularMeasure &beta, double omega) {
    BoundaryConstraints c;
    for (const auto &[t0, w] : beta.discretized().atoms) {
        const double t = wrap_angle(t0);
        const double tt = kTwoPi - t <= kAngleTol ? 0.0 : t;
        if (tt <= omega + kAngleTol) c.lower += w * std::cos(tt);
        if (tt >= kHalfPi - kAngleTol && tt <= kHalfPi + omega + kAngleTol) c.upper += w * std::cos(omega + kHalfPi - tt);
    }
    return c;
}

std::vector<double> boundary_weights(const Cap &cap) {
    const SupportSamples &p = cap.samples();
    std::vector<double> w;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (in_j_omega(p.grid()[i], cap.omega())) w.push_back(std::max(0.0, p.edge_length(i)));
    return w;
}

AngularMeasure boundary_measure(const Cap &cap) {
    const SupportSamples &p = cap.samples();
    AngularMeasure m;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double t = p.grid()[i];
        if (in_j_omega(t, cap.omega())) m.atoms.emplace_back(t, std::max(0.0, p.edge_length(i)));
    }
    return m;
}

Cap cap_from_boundary(const AngularMeasure &beta, double omega, const std::vector<double> &grid, double tol) {
    require_omega(omega);
    if (right_angle(omega)) omega = kHalfPi;
    AngularMeasure d = beta.discretized();
    for (auto &[t, w] : d.atoms) {
        if (kTwoPi - t <= kAngleTol) t = 0.0;
        if (!in_j_omega(t, omega)) throw ValidationError("boundary measure has an atom outside J_omega");
        if (w < -kGeomTol) throw ValidationError("boundary measure has a negative atom");
        w = std::max(w, 0.0);
    }
    const BoundaryConstraints c = boundary_constraints(d, omega);
    if (std::abs(c.lower - 1.0) > tol || std::abs(c.upper - 1.0) > tol)
        throw ValidationError("boundary constraints violated: " + std::to_string(c.lower) + ", " + std::to_string(c.upper));
    // Rescale each half so both constraints hold exactly.
    for (auto &[t, w] : d.atoms) w /= (t <= omega + kAngleTol) ? c.lower : c.upper;

    Vec2 s;
    for (const auto &[t, w] : d.atoms) s += w * unit_v(t);
    AngularMeasure sigma = d;
    if (omega == kHalfPi) {
        const double bottom = -s.x;
        if (bottom < -kGeomTol) throw ValidationError("negative bottom atom");
        sigma.atoms.emplace_back(1.5 * kPi, std::max(bottom, 0.0));
    } else {
        const double s1 = s.y / std::cos(omega);           // atom at pi + omega
        const double s2 = -s.x - s1 * std::sin(omega);     // atom at 3pi/2
        if (s1 < -kGeomTol || s2 < -kGeomTol) throw ValidationError("negative bottom atom");
        sigma.atoms.emplace_back(kPi + omega, std::max(s1, 0.0));
        sigma.atoms.emplace_back(1.5 * kPi, std::max(s2, 0.0));
    }
    sigma.sort_atoms();
    ConvexPolygon poly = gauss_minkowski(sigma, 1e-9 * std::max(1.0, sigma.mass()));

    Vec2 shift;
    if (omega == kHalfPi) {
        // Centre the u_0 support interval on x = 0.
        shift = {-0.5 * (poly.support(0.0) - poly.support(kPi)), 1.0 - poly.support(kHalfPi)};
    } else {
        // Solve shift . u_omega = 1 - p(omega), shift . u_{pi/2} = 1 - p(pi/2).
        const double ry = 1.0 - poly.support(kHalfPi);
        const double rw = 1.0 - poly.support(omega);
        shift = {(rw - ry * std::sin(omega)) / std::cos(omega), ry};
    }
    poly = poly.translated(shift);

    std::vector<double> g = grid;
    if (g.empty()) {
        for (const auto &[t, w] : d.atoms) g.push_back(t);
        for (double t : {0.0, omega, kHalfPi, kHalfPi + omega, kPi + omega, 1.5 * kPi}) g.push_back(wrap_angle(t));
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end(), [](double a, double b) { return b - a <= kAngleTol; }), g.end());
    }
    return validate_cap(SupportSamples::of_polygon(poly, std::move(g), omega), omega);
}

Cap cap_from_weights(const std::vector<double> &w, double omega, int n, double tol) {
    const std::vector<double> j = j_omega_grid(omega, n);
    if (w.size() != j.size()) throw ValidationError("weight vector does not match the grid");
    AngularMeasure beta;
    for (std::size_t i = 0; i < j.size(); ++i) beta.atoms.emplace_back(j[i], w[i]);
    return cap_from_boundary(beta, omega, cap_grid(omega, n), tol);
}

IotaMeasure iota(const Cap &cap) {
    IotaMeasure out;
    const auto pieces = rotation_pieces(cap.samples());
    for (const Piece &q : pieces) {
        const double m = 0.5 * (q.a + q.b);
        out.angles.push_back(m);
        out.density.push_back(arm_h(q, m) - 1.0);
    }
    for (const Piece &q : pieces) {
        const double m = 0.5 * (q.a + q.b);
        out.angles.push_back(m + kHalfPi);
        out.density.push_back(arm_g(q, m) - 1.0);
    }
    return out;
}

double iota_pairing(const Cap &cap, const std::function<double(double)> &f) {
    double s = 0.0;
    for (const Piece &q : rotation_pieces(cap.samples())) {
        s += gauss_legendre(
            [&](double t) { return f(t) * (arm_h(q, t) - 1.0) + f(t + kHalfPi) * (arm_g(q, t) - 1.0); }, q.a, q.b);
    }
    return s;
}

Cap blend(const Cap &k1, const Cap &k2, double lambda) {
    if (std::abs(k1.omega() - k2.omega()) > kAngleTol) throw ValidationError("caps have different omega");
    return validate_cap(minkowski_combine(k1.samples(), k2.samples(), lambda), k1.omega());
}

double directional_derivative(const Cap &k1, const Cap &k2) {
    if (!same_grid(k1.samples(), k2.samples())) throw ValidationError("caps live on different grids");
    auto diff = [&](double t) { return k2.support(t) - k1.support(t); };
    const double beta_part = boundary_measure(k1).pair(diff);
    return beta_part - iota_pairing(k1, diff);
}

double area_derivative(const Cap &k1, const Cap &k2) {
    if (!same_grid(k1.samples(), k2.samples())) throw ValidationError("caps live on different grids");
    return surface_measure(k1.samples()).pair([&](double t) { return k2.support(t) - k1.support(t); });
}

double mamikon_sweep(const Cap &cap) {
    const SupportSamples &p = cap.samples();
    const double omega = cap.omega();
    double s = 0.0;
    for (const Piece &q : rotation_pieces(p)) {
        // The tangent segment from A+(t) to y(t) has length g+(t).
        s += gauss_legendre([&](double t) { const double g = arm_g(q, t); return 0.5 * g * g; }, q.a, q.b);
    }
    const double t1 = omega + kHalfPi;
    const double p1 = p.support(t1);
    std::vector<double> br = {omega, t1};
    for (double t : p.grid())
        if (t > omega + kAngleTol && t < t1 - kAngleTol) br.push_back(t);
    std::sort(br.begin(), br.end());
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        const Vec2 V = p.vertex_pair(0.5 * (br[i] + br[i + 1])).second;
        s += gauss_legendre(
            [&](double t) {
                const double th = t1 - t;
                const double coef = (p1 - dot(V, unit_u(t)) * std::cos(th)) / std::sin(th);
                const double tau = coef - dot(V, unit_v(t));
                return 0.5 * tau * tau;
            },
            br[i], br[i + 1]);
    }
    return s;
}

ConcavityReport concavity_probe(const Cap &k1, const Cap &k2, int samples, double tol) {
    if (samples < 4) throw ValidationError("concavity probe needs at least four samples");
    ConcavityReport r;
    const double f0 = a1_exact(k1), f1 = a1_exact(k2), fh = a1_exact(blend(k1, k2, 0.5));
    // q(l) = f0 + b l + c l^2 through l = 0, 1/2, 1.
    const double c = 2.0 * (f1 + f0 - 2.0 * fh);
    const double b = f1 - f0 - c;
    const double scale = std::max({1.0, std::abs(f0), std::abs(f1)});
    for (int k = 0; k < samples; ++k) {
        const double l = static_cast<double>(k) / (samples - 1);
        const double v = a1_exact(blend(k1, k2, l));
        const double ch = (1.0 - l) * f0 + l * f1;
        r.lambda.push_back(l);
        r.value.push_back(v);
        r.chord.push_back(ch);
        r.max_violation = std::max(r.max_violation, ch - v);
        r.quadratic_residual = std::max(r.quadratic_residual, std::abs(v - (f0 + b * l + c * l * l)));
    }
    r.concave = r.max_violation <= tol * scale;
    r.quadratic = r.quadratic_residual <= 1e-6 * scale;
    return r;
}

} // namespace sofa
