#include "sofa/hallway.hpp"

#include <algorithm>

namespace sofa {

namespace {

void require_rotation_angle(const SupportSamples &p, double t) {
    if (p.omega() <= 0.0) throw ValidationError("support samples carry no rotation angle");
    if (t < -kAngleTol || t > p.omega() + kAngleTol) throw ValidationError("angle outside [0, omega]");
}

template <class Body>
ArmLengths arms_of(const Body &body, double t) {
    const auto [am, ap] = body.vertex_pair(t);
    const auto [cm, cp] = body.vertex_pair(t + kHalfPi);
    const Vec2 u = unit_u(t), v = unit_v(t);
    return {dot(cm - am, v), dot(cp - ap, v), dot(am - cm, u), dot(ap - cp, u)};
}

Vec2 derivative_from(const ArmLengths &a, double t, Side side) {
    const double g = side == Side::Plus ? a.g_plus : a.g_minus;
    const double h = side == Side::Plus ? a.h_plus : a.h_minus;
    return -(g - 1.0) * unit_u(t) + (h - 1.0) * unit_v(t);
}

} // namespace

bool Fan::contains(Vec2 q, double tol) const {
    return dot(q, unit_u(kPi + omega)) <= tol && -q.y <= tol;
}

bool Fan::contains_interior(Vec2 q, double tol) const {
    return dot(q, unit_u(kPi + omega)) < -tol && -q.y < -tol;
}

double Fan::floor_at(double x) const {
    const double s = std::sin(omega);
    return std::max(0.0, -x * std::cos(omega) / s);
}

HallwayPose tangent_hallway(const SupportSamples &p, double t) {
    require_rotation_angle(p, t);
    const double pt = p.support(t), pq = p.support(t + kHalfPi);
    HallwayPose h;
    h.t = t;
    h.x = inner_corner(t, pt, pq);
    h.y = pt * unit_u(t) + pq * unit_v(t);
    h.a = {wrap_angle(t), pt};
    h.c = {wrap_angle(t + kHalfPi), pq};
    h.b = {wrap_angle(t), pt - 1.0};
    h.d = {wrap_angle(t + kHalfPi), pq - 1.0};
    return h;
}

ArmLengths arm_lengths(const SupportSamples &p, double t) {
    require_rotation_angle(p, t);
    return arms_of(p, t);
}

ArmLengths arm_lengths(const ConvexPolygon &poly, double t) { return arms_of(poly, t); }

Polyline rotation_path(const SupportSamples &p, int m) {
    if (m < 2) throw ValidationError("rotation path needs at least two samples");
    require_rotation_angle(p, 0.0);
    Polyline out(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double t = p.omega() * k / (m - 1);
        out[static_cast<std::size_t>(k)] = inner_corner(t, p.support(t), p.support(t + kHalfPi));
    }
    return out;
}

Vec2 corner_derivative(const SupportSamples &p, double t, Side side) {
    require_rotation_angle(p, t);
    if (side == Side::Plus && t > p.omega() - kAngleTol) throw ValidationError("right derivative needs t < omega");
    if (side == Side::Minus && t < kAngleTol) throw ValidationError("left derivative needs t > 0");
    return derivative_from(arms_of(p, t), t, side);
}

Vec2 corner_derivative(const ConvexPolygon &poly, double t, Side side) {
    return derivative_from(arms_of(poly, t), t, side);
}

Wedge wedge(const Cap &cap, double t) {
    const double omega = cap.omega();
    if (t <= 0.0 || t >= omega) throw ValidationError("wedge needs t in (0, omega)");
    const double a = cap.support(t) - 1.0, c = cap.support(t + kHalfPi) - 1.0;
    Wedge w;
    w.t = t;
    w.W = {a / std::cos(t), 0.0};
    w.w = dot(cap.a_minus0() - w.W, unit_u(0.0));
    const double s = c / std::cos(omega - t);
    w.Z = s * unit_v(omega);
    w.z = dot(cap.c_plus_omega() - w.Z, unit_v(omega));

    const double big = 4.0 * (cap.samples().max_radius() + 2.0);
    std::vector<Vec2> poly = {{-big, -big}, {big, -big}, {big, big}, {-big, big}};
    poly = clip_halfplane(poly, unit_u(kPi + omega), 0.0);
    poly = clip_halfplane(poly, unit_u(1.5 * kPi), 0.0);
    poly = clip_halfplane(poly, unit_u(t), a);
    poly = clip_halfplane(poly, unit_u(t + kHalfPi), c);
    if (poly.size() >= 3 && shoelace(poly) > 1e-14) w.polygon = std::move(poly);
    return w;
}

} // namespace sofa
