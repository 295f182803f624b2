#pragma once

#include "sofa/cap.hpp"
#include "sofa/convex.hpp"

namespace sofa {

// The line {q : q . u_normal = offset}.
struct Line {
    double normal = 0.0;
    double offset = 0.0;
};

struct HallwayPose {
    double t = 0.0;
    Vec2 x; // inner corner
    Vec2 y; // outer corner
    Line a, b, c, d;
};

struct Fan {
    double omega = kHalfPi;

    // F = H(pi + omega, 0) n H(3pi/2, 0).
    bool contains(Vec2 q, double tol = kGeomTol) const;
    bool contains_interior(Vec2 q, double tol = kGeomTol) const;
    // Lowest point of the fan above abscissa x.
    double floor_at(double x) const;
};

struct Wedge {
    double t = 0.0;
    std::vector<Vec2> polygon; // counterclockwise, empty when the wedge is empty
    Vec2 W, Z;
    double w = 0.0, z = 0.0;

    bool empty() const { return polygon.size() < 3; }
    double area() const { return empty() ? 0.0 : shoelace(polygon); }
};

struct ArmLengths {
    double g_minus = 0.0, g_plus = 0.0, h_minus = 0.0, h_plus = 0.0;
};

enum class Side { Plus, Minus };

// Inner corner from two support values.
inline Vec2 inner_corner(double t, double p_t, double p_t90) {
    return (p_t - 1.0) * unit_u(t) + (p_t90 - 1.0) * unit_v(t);
}

HallwayPose tangent_hallway(const SupportSamples &p, double t);
ArmLengths arm_lengths(const SupportSamples &p, double t);
ArmLengths arm_lengths(const ConvexPolygon &poly, double t);
Polyline rotation_path(const SupportSamples &p, int m);
Vec2 corner_derivative(const SupportSamples &p, double t, Side side);
Vec2 corner_derivative(const ConvexPolygon &poly, double t, Side side);
Wedge wedge(const Cap &cap, double t);

} // namespace sofa
