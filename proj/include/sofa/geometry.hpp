#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace sofa {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Geometric equality tolerance for identities that hold exactly on polygons.
inline constexpr double kGeomTol = 1e-9;
// Two grid angles closer than this are the same angle.
inline constexpr double kAngleTol = 1e-12;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an input breaks a documented precondition (bad grid, wrong
// tangencies, constraint violation, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 &operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2 &operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    Vec2 &operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// u_t = (cos t, sin t), v_t = (-sin t, cos t).
inline Vec2 unit_u(double t) { return {std::cos(t), std::sin(t)}; }
inline Vec2 unit_v(double t) { return {-std::sin(t), std::cos(t)}; }

// Reduce to [0, 2pi).
inline double wrap_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r -= kTwoPi;
    return r;
}

// Counterclockwise distance from `from` to `to`, in [0, 2pi).
inline double ccw_distance(double from, double to) { return wrap_angle(to - from); }

inline bool same_angle(double a, double b, double tol = kAngleTol) {
    double d = ccw_distance(a, b);
    return d <= tol || kTwoPi - d <= tol;
}

using Polyline = std::vector<Vec2>;

// Signed curve area 1/2 sum x_i x x_{i+1} of an open polyline.
double curve_area(const Polyline &x);

// Curve area of the closed loop (adds the closing segment).
double closed_curve_area(const Polyline &x);

// I(p, q) = 1/2 (p x q) for the segment from p to q.
inline double segment_area(Vec2 p, Vec2 q) { return 0.5 * cross(p, q); }

double polyline_length(const Polyline &x);

// Composite Gauss-Legendre quadrature with a fixed 10-point rule per panel.
template <class F>
double gauss_legendre(F &&f, double a, double b) {
    static constexpr double node[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                                       0.8650633666889845, 0.9739065285171717};
    static constexpr double weight[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                         0.1494513491505806, 0.0666713443086881};
    double c = 0.5 * (a + b), h = 0.5 * (b - a), s = 0.0;
    for (int i = 0; i < 5; ++i) s += weight[i] * (f(c - h * node[i]) + f(c + h * node[i]));
    return s * h;
}

} // namespace sofa

namespace sofa {

// Keeps the part of a convex polygon (vertex list, either orientation) with
// q . n <= h.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2> &poly, Vec2 n, double h);

double shoelace(const std::vector<Vec2> &poly);

} // namespace sofa
