#include <doctest.h>

#include "helpers.hpp"
#include "sofa/functional.hpp"
#include "sofa/hallway.hpp"
#include "sofa/maximizer.hpp"
#include "sofa/sofa.hpp"

using namespace sofa;
using namespace testing;
using doctest::Approx;

TEST_CASE("maximizer values") {
    CHECK(maximizer_value(kHalfPi) == Approx(1 + kPi * kPi / 8));
    CHECK(std::abs(a1_exact(build_maximizer({kHalfPi, 2000})) - 2.23370) < 1e-4);
    CHECK(std::abs(a1_exact(build_maximizer({kPi / 3, 2000})) - (1 + kPi * kPi / 18)) < 1e-4);
    CHECK(std::abs(a1_exact(build_maximizer({0.4, 2000})) - maximizer_value(0.4)) < 1e-4);
    CHECK(a1_exact(square_quarter_circle(400)) < 2.2337);
    CHECK_THROWS_AS(build_maximizer({0.0, 10}), ValidationError);
}

TEST_CASE("maximizer supports and symmetry") {
    for (double omega : {kHalfPi, 1.0, 0.5}) {
        const int n = 1000;
        const Cap k = build_maximizer({omega, n});
        const double phi = kPi / 4 + omega / 2;
        for (double t : k.samples().grid()) {
            if (t > omega + 1e-12) continue;
            CHECK(std::abs(k.support(t) - maximizer_support_lower(omega, t)) < 1.0 / n);
            CHECK(std::abs(k.support(t + kHalfPi) - maximizer_support_upper(omega, t)) < 1.0 / n);
            CHECK(std::abs(k.support(t) - k.support(2 * phi - t)) < 1e-9);
        }
        // The closed form passes through the tangency values.
        CHECK(maximizer_support_lower(omega, omega) == Approx(1.0));
        CHECK(maximizer_support_upper(omega, 0.0) == Approx(1.0));
    }
}

TEST_CASE("maximizer boundary weights") {
    const double omega = 1.1;
    const int n = 500;
    const std::vector<double> w = maximizer_weights({omega, n});
    const std::vector<double> g = j_omega_grid(omega, n);
    REQUIRE(w.size() == g.size());
    double interior = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > 1e-12 && g[i] < omega - 1e-12) interior += w[i] * std::cos(g[i]);
    // Integral of (omega - t) cos t over [0, omega].
    const double oracle = gauss_legendre([&](double t) { return (omega - t) * std::cos(t); }, 0.0, omega);
    CHECK(oracle == Approx(1 - std::cos(omega)));
    CHECK(std::abs(interior - oracle) < 1.0 / n);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (std::abs(g[i] - omega) < 1e-12) CHECK(std::abs(w[i] * std::cos(omega) - std::cos(omega)) < 1e-9);
}

TEST_CASE("S1 curves") {
    const S1Curves c = s1_curves(10000);
    CHECK(norm(c.gamma_right.front() - Vec2{1, 1}) < 1e-15);
    CHECK(norm(c.gamma_right.back() - Vec2{kHalfPi, 0}) < 1e-6);
    CHECK(norm(c.x.front() - Vec2{kHalfPi - 1, 0}) == 0.0);
    CHECK(norm(c.x.back() - Vec2{1 - kHalfPi, 0}) < 1e-6);
    for (std::size_t i = 0; i < c.gamma_right.size(); ++i)
        CHECK(norm(c.gamma_left[i] - Vec2{-c.gamma_right[i].x, c.gamma_right[i].y}) < 1e-12);
    REQUIRE(c.segments.size() == 3);
    for (const auto &[a, b] : c.segments) {
        CHECK(std::abs(a.y - b.y) < 1e-12);
        const double len = norm(b - a);
        CHECK((std::abs(len - 1) < 1e-6 || std::abs(len - 2) < 1e-6));
    }
    CHECK_THROWS_AS(s1_curves(1), ValidationError);

    // The sampled rotation path of the built cap follows the S1 path.
    const Polyline p = rotation_path(build_maximizer({kHalfPi, 2000}).samples(), 10001);
    double gap = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) gap = std::max(gap, norm(p[i] - c.x[i]));
    CHECK(gap < 1e-3);
}

TEST_CASE("maximizer properties") {
    const Cap k = build_maximizer({kHalfPi, 2000});
    CHECK(std::abs(width(k.samples(), 0.0) - kPi) < 1e-3);
    CHECK(injectivity_check(rotation_path(k.samples(), 4096), Fan{kHalfPi}));
    const double gap = a1_exact(k) - sofa_area(k, 4096, 4096).area;
    CHECK(gap > 0.0);
    CHECK(std::abs(gap - 0.0328) < 2e-3);

    const MaximizerReport coarse = verify_maximizer({kHalfPi, 100}, 10, 3);
    const MaximizerReport fine = verify_maximizer({kHalfPi, 400}, 10, 3);
    CHECK(fine.max_derivative < coarse.max_derivative);
    CHECK(fine.density_gap < coarse.density_gap + 1e-12);
    CHECK(fine.density_gap < 5.0 / 400);
}

TEST_CASE("verify_maximizer report") {
    const MaximizerReport r = verify_maximizer({kHalfPi, 2000}, 10, 0, 1e-3);
    CHECK(r.passed);
    CHECK(r.trials == 10);
    CHECK(r.trials_above == 0);
    CHECK(r.max_trial_a1 <= r.a1 + 1e-3);
    CHECK(std::abs(r.a1 - r.expected) < 1e-4);
    CHECK(r.to_json().find("\"passed\"") != std::string::npos);
    CHECK(r.to_csv().find('\n') != std::string::npos);

    const MaximizerReport r3 = verify_maximizer({kPi / 3, 1000}, 5, 1);
    CHECK(r3.passed);
    CHECK(r3.expected == Approx(1 + kPi * kPi / 18));
}
