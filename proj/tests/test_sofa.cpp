#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sofa/functional.hpp"
#include "sofa/hallway.hpp"
#include "sofa/maximizer.hpp"
#include "sofa/sofa.hpp"

using namespace sofa;
using namespace testing;
using doctest::Approx;

namespace {

// Area of H n L_t for one hallway with inner corner (0, y0), by integrating
// column lengths. The column at x keeps y in [max(0, m), top] where top comes
// from the outer walls and m from the open inner quadrant.
double strip_hallway_area(double t, double y0) {
    const double c = std::cos(t), s = std::sin(t);
    const double a0 = y0 * s, b0 = y0 * c; // corner . u_t, corner . v_t
    auto length = [&](double x) {
        const double top = std::min({1.0, (a0 + 1 - x * c) / s, (b0 + 1 + x * s) / c});
        const double m = std::min((a0 - x * c) / s, (b0 + x * s) / c);
        return std::max(0.0, top - std::max(0.0, m));
    };
    const int k = 40000;
    const double lo = -12.0, hi = 12.0, dx = (hi - lo) / k;
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += length(lo + (i + 0.5) * dx);
    return sum * dx;
}

double single_angle_oracle(double t) {
    double best = -1.0, arg = 0.0;
    for (double y = -2.0; y <= 4.0; y += 0.01) {
        const double v = strip_hallway_area(t, y);
        if (v > best) best = v, arg = y;
    }
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = arg - 0.01, b = arg + 0.01;
    while (b - a > 1e-7) {
        const double c = b - g * (b - a), d = a + g * (b - a);
        if (strip_hallway_area(t, c) > strip_hallway_area(t, d)) b = d;
        else a = c;
    }
    return strip_hallway_area(t, 0.5 * (a + b));
}

} // namespace

TEST_CASE("niche examples") {
    CHECK(niche(half_disk_cap(400), 512, 512).area < 1e-9);

    const Cap k = build_maximizer({kHalfPi, 2000});
    const SofaShape s = sofa_area(k, 4096, 4096);
    CHECK(s.contained);
    CHECK(std::abs(s.area - 2.2009) < 2e-3);
    // Area of K minus the niche equals the closed-form A1 minus the I-term gap.
    CHECK(std::abs(a1_exact(k) - s.area - 0.0328) < 2e-3);

    const Cap sq = box_cap(0, 1);
    double prev = -1.0;
    for (int t : {257, 513, 1025}) {
        const double a = niche(sq, t, 1024).area;
        CHECK(a > 0.0);
        CHECK(a < 1.0);
        CHECK(a >= prev - 1e-12);
        prev = a;
    }
    CHECK(std::abs(prev - niche(sq, 4096, 4096).area) < 5e-3);

    for (const auto &c : niche(sq, 256, 64).columns) CHECK(c.y_upper >= c.y_lower);
    CHECK(niche(sq, 16, 8).to_csv().rfind("x,y_lower,y_upper", 0) == 0);
}

TEST_CASE("containment and sofa area") {
    CHECK(niche_contained(build_maximizer({kHalfPi, 1000}), 2048));
    CHECK(niche_contained(half_disk_cap(400), 2048));
    CHECK_FALSE(niche_contained(box_cap(0, 100), 2048));

    const SofaShape hd = sofa_area(half_disk_cap(1000), 1024, 1024);
    CHECK(hd.area == Approx(half_disk_cap(1000).area()));
    CHECK(std::abs(hd.area - kHalfPi) < 1e-5);

    const SofaShape wide = sofa_area(box_cap(0, 100), 256, 256);
    CHECK_FALSE(wide.contained);
}

TEST_CASE("monotonize") {
    const Cap hd = half_disk_cap(200);
    const SofaShape m = monotonize(hd.samples(), kHalfPi);
    CHECK(max_abs_diff(m.cap.samples().values(), hd.samples().values()) < 1e-12);
    CHECK(m.area == Approx(hd.area()).epsilon(1e-9));

    // A wide box: the cap is the box itself, the sofa the box minus its niche.
    const Cap bx = box_cap(-1.5, 1.5);
    const SofaShape mb = monotonize(bx.samples(), kHalfPi);
    CHECK(mb.cap.area() == Approx(3.0));
    for (double t : {0.0, 0.4, kHalfPi, 2.5, kPi})
        CHECK(mb.cap.support(t) == Approx(bx.polygon().support(t)).epsilon(1e-12));
    CHECK(mb.area == Approx(3.0 - niche(bx, 1024, 1024).area).epsilon(1e-12));

    // Supports above the cap get lowered to the tangent lines of P_omega.
    std::vector<double> g = cap_grid(kHalfPi, 8), v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = g[i] > kPi + 1e-9 ? 0.0 : 1.0;
    v[0] = 5.0; // t = 0
    const SofaShape clipped = monotonize(g, v, kHalfPi);
    CHECK(clipped.cap.support(0.0) < 5.0);

    v[0] = 1.0;
    v[std::find_if(g.begin(), g.end(), [](double t) { return std::abs(t - kHalfPi) < 1e-12; }) - g.begin()] = 1.2;
    CHECK_THROWS_AS(monotonize(g, v, kHalfPi), ValidationError);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const double omega = i % 2 ? kHalfPi : 0.5 + 0.1 * i;
        const Cap c = random_cap(omega, 12, rng);
        // Push some supports up: monotonize must bring the result back to a cap.
        std::vector<double> vals = c.samples().values();
        for (std::size_t j = 1; j < vals.size(); j += 3)
            if (in_j_omega(c.samples().grid()[j], omega) && !same_angle(c.samples().grid()[j], omega) &&
                !same_angle(c.samples().grid()[j], kHalfPi))
                vals[j] += 0.3;
        const SofaShape a = monotonize(c.samples().grid(), vals, omega, 256, 256);
        const SofaShape b = monotonize(a.cap.samples(), omega, 256, 256);
        CHECK(max_abs_diff(a.cap.samples().values(), b.cap.samples().values()) < 1e-9);
        CHECK(b.area == Approx(a.area).epsilon(1e-9));
        // Cap of an existing cap is itself.
        CHECK(max_abs_diff(monotonize(c.samples(), omega, 64, 64).cap.samples().values(), c.samples().values()) < 1e-9);
    }
}

TEST_CASE("injectivity check") {
    const Cap k = build_maximizer({kHalfPi, 2000});
    CHECK(injectivity_check(rotation_path(k.samples(), 4096), Fan{kHalfPi}));
    CHECK_FALSE(injectivity_check(rotation_path(half_disk_cap(200).samples(), 64), Fan{kHalfPi}));
    // The wide box path is a simple arc inside the fan.
    CHECK(injectivity_check(rotation_path(box_cap(0, 100).samples(), 4096), Fan{kHalfPi}));

    CHECK_FALSE(injectivity_check({{0, 1}, {2, 1}, {1, 0.5}, {1, 2}}, Fan{kHalfPi}));
    CHECK_FALSE(injectivity_check({{0, 1}, {0, -1}}, Fan{kHalfPi}));
    CHECK(injectivity_check({{0, 1}, {1, 1}, {1, 2}}, Fan{kHalfPi}));
}

TEST_CASE("endpoints stay outside the niche") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        const Cap c = random_cap(kHalfPi, 16, rng);
        const Vec2 a = c.a_minus0(), cc = c.c_plus_omega();
        CHECK(niche_ceiling(c, a.x, 512) <= a.y + 1e-9);
        CHECK(niche_ceiling(c, cc.x, 512) <= cc.y + 1e-9);
    }
}

TEST_CASE("polygonal bound") {
    CHECK(std::abs(polygonal_bound({kPi / 4}) - 2.0 * std::sqrt(2.0)) < 1e-3);
    CHECK(std::abs(hallway_intersection_area({kPi / 4}, {{0, 0}}) - strip_hallway_area(kPi / 4, 0.0)) < 1e-6);

    const double b6 = polygonal_bound({kPi / 6});
    CHECK(std::abs(b6 - single_angle_oracle(kPi / 6)) < 1e-4);

    BoundSearch coarse;
    coarse.budget = 20000;
    const double b2 = polygonal_bound({kPi / 6, kPi / 3}, coarse);
    CHECK(b2 <= b6 + 1e-3);
    CHECK(b2 > 2.0);

    CHECK_THROWS_AS(polygonal_bound({}), ValidationError);
    CHECK_THROWS_AS(polygonal_bound({0.0}), ValidationError);
}
