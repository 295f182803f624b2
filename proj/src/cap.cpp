#include "sofa/cap.hpp"

#include <algorithm>
#include <sstream>

namespace sofa {

namespace {

bool is_right_angle(double omega) { return std::abs(omega - kHalfPi) <= kAngleTol; }

} // namespace

void require_omega(double omega) {
    if (!(omega > 0.0 && omega <= kHalfPi + kAngleTol)) throw ValidationError("omega must lie in (0, pi/2]");
}

std::vector<double> j_omega_grid(double omega, int n) {
    require_omega(omega);
    if (n < 1) throw ValidationError("grid resolution n must be positive");
    if (is_right_angle(omega)) omega = kHalfPi;
    std::vector<double> g;
    g.reserve(2 * static_cast<std::size_t>(n) + 4);
    for (double base : {0.0, kHalfPi}) {
        g.push_back(base);
        for (int k = 0; k < n; ++k) g.push_back(base + (k + 0.5) * omega / n);
        g.push_back(base + omega);
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end(), [](double a, double b) { return std::abs(a - b) <= kAngleTol; }), g.end());
    return g;
}

std::vector<double> cap_grid(double omega, int n) {
    std::vector<double> g = j_omega_grid(omega, n);
    if (is_right_angle(omega)) {
        g.push_back(1.5 * kPi);
    } else {
        g.push_back(kPi + omega);
        g.push_back(1.5 * kPi);
    }
    return g;
}

bool in_j_omega(double t, double omega, double tol) {
    t = wrap_angle(t);
    if (kTwoPi - t <= tol) return true;
    return t <= omega + tol || (t >= kHalfPi - tol && t <= kHalfPi + omega + tol);
}

bool is_cap_normal(double t, double omega, double tol) {
    return in_j_omega(t, omega, tol) || same_angle(t, kPi + omega, tol) || same_angle(t, 1.5 * kPi, tol);
}

CapCheck check_cap(const SupportSamples &p, double omega) {
    CapCheck r;
    std::ostringstream msg;
    if (!(omega > 0.0 && omega <= kHalfPi + kAngleTol)) {
        r.ok = false;
        r.detail = "omega must lie in (0, pi/2]";
        return r;
    }
    for (double t : {0.0, omega, kHalfPi, kHalfPi + omega, kPi + omega, 1.5 * kPi}) {
        if (!p.index_of(t)) {
            r.ok = false;
            msg << "grid does not contain angle " << t;
            r.detail = msg.str();
            return r;
        }
    }
    const double checks[4][2] = {{omega, 1.0}, {kHalfPi, 1.0}, {kPi + omega, 0.0}, {1.5 * kPi, 0.0}};
    for (const auto &c : checks) {
        const double got = p.support(c[0]);
        if (std::abs(got - c[1]) > kGeomTol) {
            r.ok = false;
            r.failed_condition = 1;
            msg << "condition 1: p(" << c[0] << ") = " << got << ", expected " << c[1];
            r.detail = msg.str();
            return r;
        }
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double len = p.edge_length(i);
        const double t = p.grid()[i];
        if (len < -kGeomTol) {
            r.ok = false;
            r.failed_condition = 2;
            msg << "values are not a support function at angle " << t << " (edge length " << len << ")";
            r.detail = msg.str();
            return r;
        }
        if (len > kGeomTol && !is_cap_normal(t, omega)) {
            r.ok = false;
            r.failed_condition = 2;
            msg << "condition 2: edge of length " << len << " with normal " << t << " outside J_omega";
            r.detail = msg.str();
            return r;
        }
    }
    return r;
}

Cap validate_cap(SupportSamples p, double omega) {
    CapCheck r = check_cap(p, omega);
    if (!r.ok) throw ValidationError("invalid cap: " + r.detail);
    Cap c;
    c.omega_ = is_right_angle(omega) ? kHalfPi : omega;
    c.p_ = SupportSamples(p.grid(), p.values(), c.omega_);
    return c;
}

double Cap::area() const {
    double s = 0.0;
    for (std::size_t i = 0; i < p_.size(); ++i) s += cross(p_.corner(i), p_.corner((i + 1) % p_.size()));
    return 0.5 * s;
}

Cap cap_from_polygon(const ConvexPolygon &poly, double omega, std::vector<double> grid) {
    require_omega(omega);
    for (double t : poly.normals()) grid.push_back(wrap_angle(t));
    for (double t : {0.0, omega, kHalfPi, kHalfPi + omega, kPi + omega, 1.5 * kPi}) grid.push_back(wrap_angle(t));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(), [](double a, double b) { return b - a <= kAngleTol; }), grid.end());
    return validate_cap(SupportSamples::of_polygon(poly, std::move(grid), omega), omega);
}

Cap half_disk_cap(int n) {
    std::vector<double> g = cap_grid(kHalfPi, n);
    std::vector<double> v(g.size(), 1.0);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > kPi + kAngleTol) v[i] = 0.0;
    return validate_cap(SupportSamples(std::move(g), std::move(v), kHalfPi), kHalfPi);
}

} // namespace sofa
