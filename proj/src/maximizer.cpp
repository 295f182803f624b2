#include "sofa/maximizer.hpp"

#include <algorithm>
#include <cstdio>

#include "sofa/functional.hpp"
#include "sofa/hallway.hpp"

namespace sofa {

namespace {

bool right_angle(double omega) { return std::abs(omega - kHalfPi) <= kAngleTol; }

// Top corner of the parallelogram P_omega (l(omega, 1) n l(pi/2, 1)); (0, 1) at omega = pi/2.
Vec2 o_omega(double omega) { return {std::tan(0.25 * kPi - 0.5 * omega), 1.0}; }

// Antiderivatives of (omega - t) cos t and s cos(omega - s).
double lower_cos_mass(double omega, double t) { return (omega - t) * std::sin(t) - std::cos(t); }
double upper_cos_mass(double omega, double s) { return -s * std::sin(omega - s) + std::cos(omega - s); }

} // namespace

double maximizer_support_lower(double omega, double t) { return omega - t + dot(o_omega(omega), unit_u(t)); }

double maximizer_support_upper(double omega, double t) { return t + dot(o_omega(omega), unit_v(t)); }

std::vector<double> maximizer_weights(const MaximizerSpec &spec) {
    require_omega(spec.omega);
    const double omega = right_angle(spec.omega) ? kHalfPi : spec.omega;
    const int n = spec.n;
    const std::vector<double> grid = j_omega_grid(omega, n);
    std::vector<double> w(grid.size(), 0.0);
    const double h = omega / n;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const bool upper = t > omega + kAngleTol || (right_angle(omega) && t > kHalfPi + kAngleTol);
        const double s = upper ? t - kHalfPi : t;
        const double cell = std::round(s / h - 0.5);
        const bool midpoint = std::abs(s - (cell + 0.5) * h) <= 1e-9 * h && s > kAngleTol && s < omega - kAngleTol;
        if (midpoint) {
            const double a = cell * h, b = (cell + 1.0) * h;
            if (!upper) w[i] = (lower_cos_mass(omega, b) - lower_cos_mass(omega, a)) / std::cos(s);
            else w[i] = (upper_cos_mass(omega, b) - upper_cos_mass(omega, a)) / std::cos(omega - s);
        } else if (same_angle(t, kHalfPi)) {
            w[i] = right_angle(omega) ? 2.0 : 1.0;
        } else if (same_angle(t, omega)) {
            w[i] = 1.0;
        }
    }
    return w;
}

Cap build_maximizer(const MaximizerSpec &spec) {
    return cap_from_weights(maximizer_weights(spec), spec.omega, spec.n);
}

std::vector<double> random_boundary_weights(double omega, int n, std::mt19937_64 &rng) {
    const std::vector<double> grid = j_omega_grid(omega, n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> power(1, 4);
    const int k = power(rng);
    std::vector<double> w(grid.size());
    for (auto &x : w) x = std::pow(unit(rng), k);
    double lower = 0.0, upper = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= omega + kAngleTol) lower += w[i] * std::cos(grid[i]);
        else upper += w[i] * std::cos(omega + kHalfPi - grid[i]);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) w[i] /= grid[i] <= omega + kAngleTol ? lower : upper;
    return w;
}

Cap random_cap(double omega, int n, std::mt19937_64 &rng) {
    return cap_from_weights(random_boundary_weights(omega, n, rng), omega, n);
}

S1Curves s1_curves(int n) {
    if (n < 2) throw ValidationError("S1 curves need at least two samples");
    auto gamma_d = [](double t) { return t * Vec2{std::cos(t), -std::sin(t)}; };
    auto x_d = [](double t) { return -t * unit_u(t) + (kHalfPi - t) * unit_v(t); };
    S1Curves c;
    Vec2 g{1.0, 1.0}, x{kHalfPi - 1.0, 0.0};
    const double h = kHalfPi / n;
    c.gamma_right.push_back(g);
    c.x.push_back(x);
    for (int k = 0; k < n; ++k) {
        const double a = k * h, m = a + 0.5 * h, b = a + h;
        g += (h / 6.0) * (gamma_d(a) + 4.0 * gamma_d(m) + gamma_d(b));
        x += (h / 6.0) * (x_d(a) + 4.0 * x_d(m) + x_d(b));
        c.gamma_right.push_back(g);
        c.x.push_back(x);
    }
    for (const auto &p : c.gamma_right) c.gamma_left.push_back({-p.x, p.y});
    const Vec2 g_end = c.gamma_right.back();
    c.segments = {{{-1.0, 1.0}, {1.0, 1.0}},
                  {c.x.front(), g_end},
                  {{-g_end.x, g_end.y}, c.x.back()}};
    return c;
}

std::string MaximizerReport::to_json() const {
    char buf[768];
    std::snprintf(buf, sizeof buf,
                  "{\"omega\": %.17g, \"n\": %d, \"trials\": %d, \"density_gap\": %.6e, \"max_derivative\": %.6e, "
                  "\"a1\": %.12f, \"expected\": %.12f, \"max_trial_a1\": %.12f, \"trials_above\": %d, "
                  "\"tol\": %.3e, \"passed\": %s}",
                  omega, n, trials, density_gap, max_derivative, a1, expected, max_trial_a1, trials_above, tol,
                  passed ? "true" : "false");
    return buf;
}

std::string MaximizerReport::to_csv() const {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "check,value,tolerance,passed\n"
                  "density_gap,%.6e,%.3e,%d\n"
                  "max_derivative,%.6e,%.3e,%d\n"
                  "a1_error,%.6e,%.3e,%d\n"
                  "trials_above,%d,0,%d\n",
                  density_gap, tol, density_gap <= tol, max_derivative, tol, max_derivative <= tol,
                  std::abs(a1 - expected), tol, std::abs(a1 - expected) <= tol, trials_above, trials_above == 0);
    return buf;
}

MaximizerReport verify_maximizer(const MaximizerSpec &spec, int trials, std::uint64_t seed, double tol) {
    MaximizerReport r;
    r.omega = spec.omega;
    r.n = spec.n;
    r.trials = trials;
    r.tol = tol;
    const Cap k = build_maximizer(spec);
    const double omega = k.omega();
    r.a1 = a1_exact(k);
    r.expected = maximizer_value(omega);

    // Cell densities of beta against cell averages of iota.
    const SupportSamples &p = k.samples();
    const double h = omega / spec.n;
    const auto w = boundary_weights(k);
    const auto grid = j_omega_grid(omega, spec.n);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const bool upper = t > omega + kAngleTol || (omega == kHalfPi && t > kHalfPi + kAngleTol);
        const double s = upper ? t - kHalfPi : t;
        if (s <= kAngleTol || s >= omega - kAngleTol) continue;
        const double a = s - 0.5 * h, b = s + 0.5 * h;
        auto dens = [&](double u) {
            const ArmLengths arms = arm_lengths(p, u);
            return upper ? arms.g_plus - 1.0 : arms.h_plus - 1.0;
        };
        const double iota_avg = (gauss_legendre(dens, a, s) + gauss_legendre(dens, s, b)) / h;
        r.density_gap = std::max(r.density_gap, std::abs(w[i] / h - iota_avg));
    }

    std::mt19937_64 rng(seed);
    r.max_trial_a1 = -1e300;
    for (int i = 0; i < trials; ++i) {
        const Cap kp = random_cap(omega, spec.n, rng);
        r.max_derivative = std::max(r.max_derivative, std::abs(directional_derivative(k, kp)));
        const double v = a1_exact(kp);
        r.max_trial_a1 = std::max(r.max_trial_a1, v);
        if (v > r.a1 + tol) ++r.trials_above;
    }
    r.passed = r.density_gap <= tol && r.max_derivative <= tol && std::abs(r.a1 - r.expected) <= tol &&
               r.trials_above == 0;
    return r;
}

} // namespace sofa
