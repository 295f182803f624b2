#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sofa/functional.hpp"
#include "sofa/hallway.hpp"
#include "sofa/maximizer.hpp"

using namespace sofa;
using namespace testing;
using doctest::Approx;

namespace {

double pair_p(const Cap &cap, const AngularMeasure &beta) {
    return beta.pair([&](double t) { return cap.support(t); });
}

// Region between the upper boundary and y_K, from curve areas of its four sides.
double swept_area_direct(const Cap &c, int m) {
    Polyline y;
    for (int i = 0; i <= m; ++i) y.push_back(tangent_hallway(c.samples(), c.omega() * i / m).y);
    const Polyline upper = boundary_arc(c.polygon(), 0.0, c.omega() + kHalfPi, true);
    return curve_area(y) + segment_area(y.back(), c.c_plus_omega()) - curve_area(upper) -
           segment_area(y.front(), c.a_minus0());
}

} // namespace

TEST_CASE("curve area and A1 examples") {
    const Cap k = build_maximizer({kHalfPi, 2000});
    const double iota_k = std::pow(kPi, 3) / 24 - kPi * kPi / 8 + kHalfPi - 1;
    CHECK(std::abs(curve_area(rotation_path(k.samples(), 2000)) - iota_k) < 1e-3);
    CHECK(std::abs(rotation_path_area(k) - iota_k) < 1e-4);
    CHECK(std::abs(a1(k, 2000) - (1 + kPi * kPi / 8)) < 1e-4);
    CHECK(std::abs(a1_exact(k) - (1 + kPi * kPi / 8)) < 1e-4);

    const Cap hd = half_disk_cap(400);
    CHECK(a1_exact(hd) == Approx(hd.area()).epsilon(1e-9));
    CHECK(std::abs(a1(hd, 400) - kHalfPi) < 1e-4);

    const Cap k3 = build_maximizer({kPi / 3, 2000});
    CHECK(std::abs(a1_exact(k3) - (1 + kPi * kPi / 18)) < 1e-4);

    // Sampled and exact agree as m grows.
    std::mt19937_64 rng(1);
    const Cap c = random_cap(1.0, 30, rng);
    CHECK(std::abs(a1(c, 20000) - a1_exact(c)) < 1e-4);
    CHECK(std::abs(a1(c, 20000) - a1_exact(c)) < std::abs(a1(c, 200) - a1_exact(c)) + 1e-12);
}

TEST_CASE("boundary measure examples") {
    const int n = 400;
    const Cap sq = square_quarter_circle(n);
    const AngularMeasure b = boundary_measure(sq);
    CHECK(b.atom_at(0.0) == Approx(1.0));
    CHECK(std::abs(b.atom_at(kHalfPi) - 1.0) < 5.0 / n);
    double arc = 0.0;
    for (const auto &[t, w] : b.atoms)
        if (t > kHalfPi + 1e-12 && t < kPi - 1e-12) arc += w;
    CHECK(std::abs(arc - kHalfPi) < 5.0 / n);

    const Cap k = build_maximizer({kPi / 3, n});
    const AngularMeasure bk = boundary_measure(k);
    const double h = (kPi / 3) / n;
    for (const auto &[t, w] : bk.atoms) {
        if (t > 1e-9 && t < kPi / 3 - 1e-9) CHECK(std::abs(w / h - (kPi / 3 - t)) < 5.0 / n);
        if (t > kHalfPi + 1e-9 && t < kHalfPi + kPi / 3 - 1e-9) CHECK(std::abs(w / h - (t - kHalfPi)) < 5.0 / n);
    }
    CHECK(std::abs(bk.atom_at(kPi / 3) - 1.0) < 5.0 / n);
    CHECK(std::abs(bk.atom_at(kHalfPi) - 1.0) < 5.0 / n);
    CHECK(std::abs(boundary_measure(build_maximizer({kHalfPi, n})).atom_at(kHalfPi) - 2.0) < 5.0 / n);
}

TEST_CASE("boundary measure identities on random caps") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double omega = trial % 3 == 0 ? kHalfPi : 0.2 + 1.3 * u(rng);
        const int n = 40;
        const Cap c = random_cap(omega, n, rng);
        const AngularMeasure beta = boundary_measure(c);

        // Area is half the pairing with the supports; bottom supports vanish.
        CHECK(c.area() == Approx(0.5 * pair_p(c, beta)).epsilon(1e-9));
        const BoundaryConstraints bc = boundary_constraints(beta, omega);
        CHECK(std::abs(bc.lower - 1.0) < 1.0 / n);
        CHECK(std::abs(bc.upper - 1.0) < 1.0 / n);

        // Round trips.
        const Cap back = cap_from_boundary(beta, omega, c.samples().grid());
        CHECK(max_abs_diff(back.samples().values(), c.samples().values()) < 1e-9);
        const std::vector<double> w = boundary_weights(c);
        const Cap again = cap_from_weights(w, omega, n);
        CHECK(max_abs_diff(boundary_weights(again), w) < 1e-9);

        // Beta is linear along Minkowski blends.
        const Cap d = random_cap(omega, n, rng);
        const double l = u(rng);
        const std::vector<double> wb = boundary_weights(blend(c, d, l)), wd = boundary_weights(d);
        for (std::size_t i = 0; i < wb.size(); ++i) CHECK(wb[i] == Approx((1 - l) * w[i] + l * wd[i]).epsilon(1e-9));

        if (omega == kHalfPi) {
            double s = 0.0;
            for (const auto &[t, wt] : beta.atoms) s += std::sin(t) * wt;
            CHECK(surface_measure(c.samples()).atom_at(1.5 * kPi) == Approx(s).epsilon(1e-9));
        }
    }
}

TEST_CASE("cap from boundary") {
    for (double omega : {kHalfPi, kPi / 3}) {
        const int n = 400;
        const Cap k = build_maximizer({omega, n});
        for (double t : k.samples().grid()) {
            if (t <= omega + 1e-12) CHECK(std::abs(k.support(t) - maximizer_support_lower(omega, t)) < 1e-6 + 1.0 / n);
            const double s = t - kHalfPi;
            if (s >= 0 && s <= omega) CHECK(std::abs(k.support(t) - maximizer_support_upper(omega, s)) < 1e-6 + 1.0 / n);
        }
    }
    AngularMeasure bad;
    bad.atoms = {{0.0, 1.0}, {kHalfPi, 0.2}};
    CHECK_THROWS_AS(cap_from_boundary(bad, kHalfPi), ValidationError);
    AngularMeasure outside;
    outside.atoms = {{0.0, 1.0}, {kHalfPi, 1.0}, {4.0, 1.0}};
    CHECK_THROWS_AS(cap_from_boundary(outside, kHalfPi), ValidationError);
    CHECK_THROWS_AS(cap_from_weights({1.0, 1.0}, kHalfPi, 10), ValidationError);
}

TEST_CASE("iota examples") {
    const IotaMeasure hd = iota(half_disk_cap(2000));
    for (double d : hd.density) CHECK(std::abs(d) < 2e-3);

    const double omega = kPi / 3;
    const IotaMeasure ik = iota(build_maximizer({omega, 2000}));
    for (std::size_t i = 0; i < ik.angles.size(); ++i) {
        const double t = ik.angles[i];
        if (t < omega) CHECK(std::abs(ik.density[i] - (omega - t)) < 1e-3);
        else CHECK(std::abs(ik.density[i] - (t - kHalfPi)) < 1e-3);
    }

    const Cap sq = box_cap(0, 1);
    const IotaMeasure is = iota(sq);
    for (std::size_t i = 0; i < is.angles.size(); ++i) {
        const double t = is.angles[i];
        const ArmLengths a = arm_lengths(sq.polygon(), t < kHalfPi ? t : t - kHalfPi);
        CHECK(is.density[i] == Approx(t < kHalfPi ? a.h_plus - 1 : a.g_plus - 1).epsilon(1e-9));
    }
}

TEST_CASE("directional and area derivatives") {
    const int n = 400;
    std::mt19937_64 rng(21);
    const Cap k = build_maximizer({kHalfPi, n});
    CHECK(std::abs(directional_derivative(k, k)) < 1e-12);
    CHECK(std::abs(area_derivative(k, k)) < 1e-12);
    for (int i = 0; i < 10; ++i) {
        const Cap c = random_cap(kHalfPi, n, rng), d = random_cap(kHalfPi, n, rng);
        CHECK(std::abs(directional_derivative(k, c)) < 1e-4);

        const double h = 1e-4;
        const double fd = (a1_exact(blend(c, d, h)) - a1_exact(c)) / h;
        CHECK(std::abs(fd - directional_derivative(c, d)) < 10 * h);
        const double fa = (blend(c, d, h).area() - c.area()) / h;
        CHECK(std::abs(fa - area_derivative(c, d)) < 10 * h);

        // Pairing form 2V(K2, K1) - 2V(K1, K1).
        const AngularMeasure s1 = surface_measure(c.samples());
        CHECK(area_derivative(c, d) ==
              Approx(2 * mixed_volume(d.samples(), s1) - 2 * mixed_volume(c.samples(), s1)).epsilon(1e-9));
    }
    // Unit-width box to width-two box: area 1 + l.
    CHECK(area_derivative(box_cap(-0.5, 0.5), box_cap(-1, 1)) == Approx(1.0));
    CHECK_THROWS_AS(directional_derivative(k, build_maximizer({kHalfPi, n + 1})), ValidationError);
}

TEST_CASE("Mamikon sweep and concavity") {
    CHECK(std::abs(mamikon_sweep(half_disk_cap(2000)) - 1.0) < 1e-3);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 8; ++i) {
        const double omega = i % 2 ? kHalfPi : 0.9;
        const Cap c = random_cap(omega, 30, rng), d = random_cap(omega, 30, rng);
        const Cap m = blend(c, d, 0.5);
        CHECK(std::abs(mamikon_sweep(c) - swept_area_direct(c, 100000)) < 1e-5);
        const double lin = mamikon_sweep(m) + a1_exact(m);
        CHECK(lin == Approx(0.5 * (mamikon_sweep(c) + a1_exact(c) + mamikon_sweep(d) + a1_exact(d))).epsilon(1e-7));
        CHECK(mamikon_sweep(m) <= 0.5 * (mamikon_sweep(c) + mamikon_sweep(d)) + 1e-9);

        const ConcavityReport r = concavity_probe(c, d, 9);
        CHECK(r.concave);
        CHECK(r.quadratic);
    }

    const Cap k = build_maximizer({kHalfPi, 200});
    const ConcavityReport same = concavity_probe(k, k, 5);
    CHECK(same.max_violation == Approx(0.0).epsilon(1e-12));
    const ConcavityReport r = concavity_probe(k, square_quarter_circle(200), 11);
    CHECK(r.concave);
    CHECK(r.quadratic_residual <= 1e-6 * 3);
    CHECK_THROWS_AS(concavity_probe(k, k, 3), ValidationError);
}

TEST_CASE("maximizer arm-length relations") {
    const double omega = kPi / 3;
    const int n = 2000;
    const Cap k = build_maximizer({omega, n});
    // Windows of whole cells, so each difference quotient sees complete atoms.
    const double cell = omega / n, h = 10 * cell;
    for (double t0 : {0.2, 0.5, 0.8}) {
        const double t = std::round(t0 / cell) * cell;
        const ArmLengths a = arm_lengths(k.samples(), t);
        // g - t and h + t constant.
        CHECK(std::abs(a.g_plus - t - 1.0) < 1e-3);
        CHECK(std::abs(a.h_plus + t - (1.0 + omega)) < 1e-3);
        const double dg = (arm_lengths(k.samples(), t + h).g_plus - arm_lengths(k.samples(), t - h).g_plus) / (2 * h);
        const double dh = (arm_lengths(k.samples(), t + h).h_plus - arm_lengths(k.samples(), t - h).h_plus) / (2 * h);
        CHECK(std::abs(dg - (a.h_plus - (omega - t))) < 10.0 / n);
        CHECK(std::abs(dh - (t - a.g_plus)) < 10.0 / n);
    }
}
