#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "sofa/maximizer.hpp"

using namespace sofa;
using namespace testing;
using doctest::Approx;

TEST_CASE("curve area of simple loops and segments") {
    CHECK(curve_area({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}) == Approx(1.0));
    CHECK(curve_area({{1, 0}, {0, 1}}) == Approx(0.5));
    CHECK(closed_curve_area({{0, 0}, {0, 1}, {1, 1}, {1, 0}}) == Approx(-1.0));
}

TEST_CASE("support and vertex pairs of the unit square") {
    const ConvexPolygon sq = unit_square();
    CHECK(support_of_polygon(sq, 0.0) == Approx(1.0));
    CHECK(support_of_polygon(sq, kPi / 4) == Approx(std::sqrt(2.0)));

    auto [vm, vp] = vertex_pair(sq, kHalfPi);
    CHECK(vm.x == Approx(1.0));
    CHECK(vm.y == Approx(1.0));
    CHECK(vp.x == Approx(0.0));
    CHECK(vp.y == Approx(1.0));

    auto [cm, cp] = vertex_pair(sq, kPi / 4);
    CHECK(norm(cm - Vec2{1, 1}) < 1e-12);
    CHECK(norm(cp - Vec2{1, 1}) < 1e-12);
}

TEST_CASE("half-disk tangency point") {
    const ConvexPolygon hd = half_disk_cap(2000).polygon();
    auto [vm, vp] = hd.vertex_pair(kPi / 4);
    const Vec2 expect = unit_u(kPi / 4);
    CHECK(norm(vm - expect) < 1e-3);
    CHECK(norm(vp - expect) < 1e-3);
}

TEST_CASE("vertex intersection") {
    const SupportSamples sq = SupportSamples::of_polygon(unit_square());
    const Vec2 a = vertex_intersection(sq, 0.0, kHalfPi);
    CHECK(norm(a - Vec2{1, 1}) < 1e-12);
    const Vec2 b = vertex_intersection(0.0, 1.0, kPi / 4, std::sqrt(2.0));
    CHECK(norm(b - Vec2{1, 1}) < 1e-12);
    CHECK_THROWS_AS(vertex_intersection(0.0, 1.0, kPi, 1.0), ValidationError);

    // Closed-form supports give p(0) = pi/2 and p(pi/2) = 1 in the centred frame.
    const Cap k = build_maximizer({kHalfPi, 2000});
    const Vec2 c = vertex_intersection(k.samples(), 0.0, kHalfPi);
    CHECK(std::abs(c.x - kHalfPi) < 1e-3);
    CHECK(std::abs(c.y - 1.0) < 1e-3);
}

TEST_CASE("Minkowski combination") {
    const ConvexPolygon sq = unit_square();
    const std::vector<double> g = {0.0, kPi / 4, kHalfPi, kPi, 1.5 * kPi};
    const SupportSamples p1 = SupportSamples::of_polygon(sq, g);
    const SupportSamples p2 = SupportSamples::of_polygon(sq.translated({1, 0}), g);
    const SupportSamples big = SupportSamples::of_polygon(box(0, 2, 0, 2), g);

    CHECK(max_abs_diff(minkowski_combine(p1, p2, 0.0).values(), p1.values()) < 1e-15);
    const SupportSamples half = SupportSamples::of_polygon(sq.translated({0.5, 0}), g);
    CHECK(max_abs_diff(minkowski_combine(p1, p2, 0.5).values(), half.values()) < 1e-12);
    const SupportSamples mid = SupportSamples::of_polygon(box(0, 1.5, 0, 1.5), g);
    CHECK(max_abs_diff(minkowski_combine(p1, big, 0.5).values(), mid.values()) < 1e-12);

    const SupportSamples other = SupportSamples::of_polygon(sq, {0.0, kHalfPi, kPi, 1.5 * kPi});
    CHECK_THROWS_AS(minkowski_combine(p1, other, 0.5), ValidationError);
}

TEST_CASE("width") {
    const ConvexPolygon sq = unit_square();
    CHECK(width(sq, 0.0) == Approx(1.0));
    CHECK(width(sq, kPi / 4) == Approx(std::sqrt(2.0)));
    // Cor A.26 form: integral of sin(u - t) over the surface measure on (t, t + pi).
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const ConvexPolygon p = random_polygon(rng);
        const double t = 0.37 * i;
        double s = 0.0;
        for (const auto &[u, w] : surface_measure(p).atoms) {
            const double d = ccw_distance(t, u);
            if (d > 1e-12 && d < kPi - 1e-12) s += w * std::sin(d);
        }
        CHECK(width(p, t) == Approx(s).epsilon(1e-9));
    }
}

TEST_CASE("polygon area") {
    CHECK(polygon_area(unit_square()) == Approx(1.0));
    CHECK(polygon_area(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {0, 1}})) == Approx(0.5));
    // Circumscribed polygon: each top edge contributes half its tangent length times radius 1.
    const Cap hd = half_disk_cap(2000);
    const auto &g = hd.samples().grid();
    double oracle = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > kPi + 1e-12) continue;
        const double prev = ccw_distance(g[(i + g.size() - 1) % g.size()], g[i]);
        const double next = ccw_distance(g[i], g[(i + 1) % g.size()]);
        // The bottom edge has support 0, so nodes 0 and pi only get their upper half.
        if (i > 0) oracle += 0.5 * std::tan(prev / 2);
        if (g[i] < kPi - 1e-12) oracle += 0.5 * std::tan(next / 2);
    }
    CHECK(polygon_area(hd.polygon()) == Approx(oracle).epsilon(1e-12));
    CHECK(std::abs(polygon_area(hd.polygon()) - kHalfPi) < 1e-5);
}

TEST_CASE("surface measure") {
    const AngularMeasure sq = surface_measure(unit_square());
    REQUIRE(sq.atoms.size() == 4);
    for (double t : {0.0, kHalfPi, kPi, 1.5 * kPi}) CHECK(sq.atom_at(t) == Approx(1.0));

    const AngularMeasure tri = surface_measure(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(tri.atom_at(kPi) == Approx(1.0));
    CHECK(tri.atom_at(1.5 * kPi) == Approx(1.0));
    CHECK(tri.atom_at(kPi / 4) == Approx(std::sqrt(2.0)));
    CHECK(norm(tri.closure_defect()) < 1e-9);

    const AngularMeasure cap = surface_measure(square_quarter_circle(500).samples());
    CHECK(cap.atom_at(0.0) == Approx(1.0));
    CHECK(std::abs(cap.atom_at(kHalfPi) - 1.0) < 2e-3); // circumscribed arc overshoots by tan(cell / 2)
}

TEST_CASE("area via measure and mixed volume") {
    const ConvexPolygon sq = unit_square(), big = box(0, 2, 0, 2);
    CHECK(area_via_measure(SupportSamples::of_polygon(sq), surface_measure(sq)) == Approx(1.0));
    CHECK(area_via_measure(SupportSamples::of_polygon(big), surface_measure(big)) == Approx(4.0));
    CHECK(mixed_volume(SupportSamples::of_polygon(sq), surface_measure(sq)) == Approx(1.0));
    CHECK(mixed_volume(SupportSamples::of_polygon(sq), surface_measure(big)) == Approx(2.0));
    CHECK(mixed_volume(SupportSamples::of_polygon(big), surface_measure(sq)) == Approx(2.0));

    const ConvexPolygon hd = half_disk_cap(500).polygon();
    const double a = mixed_volume(SupportSamples::of_polygon(sq), surface_measure(hd));
    const double b = mixed_volume(SupportSamples::of_polygon(hd), surface_measure(sq));
    CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("Gauss-Minkowski reconstruction") {
    AngularMeasure sq;
    for (double t : {0.0, kHalfPi, kPi, 1.5 * kPi}) sq.atoms.emplace_back(t, 1.0);
    const ConvexPolygon p = gauss_minkowski(sq);
    CHECK(p.area() == Approx(1.0));
    CHECK(width(p, 0.0) == Approx(1.0));
    CHECK(width(p, kHalfPi) == Approx(1.0));

    AngularMeasure tri;
    tri.atoms = {{1.5 * kPi, 1.0}, {0.0, 1.0}, {0.75 * kPi, std::sqrt(2.0)}};
    tri.sort_atoms();
    const ConvexPolygon t = gauss_minkowski(tri);
    CHECK(t.vertices().size() == 3);
    CHECK(t.area() == Approx(0.5));

    AngularMeasure open;
    open.atoms = {{0.0, 1.0}, {kHalfPi, 1.0}};
    CHECK_THROWS_AS(gauss_minkowski(open), ValidationError);
}

TEST_CASE("boundary arcs") {
    const ConvexPolygon sq = unit_square();
    // Closed start [0, pi/2] includes the whole right edge.
    const Polyline closed = boundary_arc(sq, 0.0, kHalfPi, true);
    REQUIRE(closed.size() == 3);
    CHECK(norm(closed[0] - Vec2{1, 0}) < 1e-12);
    CHECK(norm(closed[1] - Vec2{1, 1}) < 1e-12);
    CHECK(norm(closed[2] - Vec2{0, 1}) < 1e-12);
    CHECK(polyline_length(closed) == Approx(2.0));
    // Open start (0, pi/2] has length sigma((0, pi/2]) = 1.
    CHECK(polyline_length(boundary_arc(sq, 0.0, kHalfPi)) == Approx(1.0));

    CHECK(curve_area(boundary_arc(sq, 0.3, 0.3 + kTwoPi)) == Approx(1.0));

    const ConvexPolygon hd = half_disk_cap(2000).polygon();
    CHECK(std::abs(polyline_length(boundary_arc(hd, 0.0, kHalfPi)) - kHalfPi) < 1e-4);
}

TEST_CASE("convex_core properties on random polygons") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const ConvexPolygon p = random_polygon(rng), q = random_polygon(rng);
        double radius = 0.0;
        for (Vec2 v : p.vertices()) radius = std::max(radius, norm(v));

        // Support Lipschitz with constant max |v|.
        for (int k = 0; k < 20; ++k) {
            const double s = kTwoPi * u(rng), t = s + 0.5 * u(rng);
            CHECK(std::abs(p.support(t) - p.support(s)) <= radius * (t - s) + 1e-12);
        }

        // Measure of a Minkowski sum (hull of pairwise sums) is the sum of measures.
        std::vector<Vec2> sums;
        for (Vec2 a : p.vertices())
            for (Vec2 b : q.vertices()) sums.push_back(a + b);
        const AngularMeasure ms = surface_measure(ConvexPolygon::hull(sums));
        const AngularMeasure mp = surface_measure(p), mq = surface_measure(q);
        for (const auto &[t, w] : ms.atoms) CHECK(std::abs(w - mp.atom_at(t) - mq.atom_at(t)) < 1e-9);
        CHECK(std::abs(ms.mass() - mp.mass() - mq.mass()) < 1e-9);

        // Support linearity on the union of both normal sets.
        std::vector<double> grid = p.normals();
        grid.insert(grid.end(), q.normals().begin(), q.normals().end());
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end(), [](double a, double b) { return b - a < 1e-9; }), grid.end());
        const SupportSamples sp2 = SupportSamples::of_polygon(p, grid), sq = SupportSamples::of_polygon(q, grid);
        const double lambda = u(rng);
        const SupportSamples mix = minkowski_combine(sp2, sq, lambda);
        for (int k = 0; k < 10; ++k) {
            const double t = kTwoPi * u(rng);
            CHECK(mix.support(t) == Approx((1 - lambda) * p.support(t) + lambda * q.support(t)).epsilon(1e-12));
        }

        // v+(t) . u_{t0} decreases on [t0, t0 + pi]. The v_{t0} form fails as soon
        // as an edge normal lies in (t0, t0 + pi/2).
        const double t0 = kTwoPi * u(rng);
        double prev = 1e300;
        for (int k = 0; k <= 200; ++k) {
            const double t = t0 + kPi * k / 200.0;
            const double cur = dot(p.vertex_pair(t).second, unit_u(t0));
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }

        // v+ != v- exactly at atoms of the measure.
        for (int k = 0; k < 50; ++k) {
            const double t = (k % 2 == 0) ? p.normals()[static_cast<std::size_t>(k / 2) % p.edge_count()]
                                          : kTwoPi * u(rng);
            auto [vm, vp] = p.vertex_pair(t);
            CHECK((norm(vp - vm) > 1e-12) == (mp.atom_at(t) > 0.0));
            CHECK(norm(vp - vm) == Approx(mp.atom_at(t)).epsilon(1e-9));
        }
    }
}
