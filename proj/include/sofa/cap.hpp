#pragma once

#include <string>
#include <vector>

#include "sofa/convex.hpp"

namespace sofa {

// Standard cap grid for rotation angle omega with n cells per half of J_omega:
// the nodes 0, omega, pi/2, pi/2 + omega, the cell midpoints of [0, omega] and
// of [pi/2, pi/2 + omega], and the bottom normals pi + omega, 3pi/2.
std::vector<double> cap_grid(double omega, int n);
// The J_omega part of cap_grid, ascending.
std::vector<double> j_omega_grid(double omega, int n);

bool in_j_omega(double t, double omega, double tol = kAngleTol);
// The allowed normal set J_omega u {pi + omega, 3pi/2}.
bool is_cap_normal(double t, double omega, double tol = kAngleTol);

void require_omega(double omega);

struct CapCheck {
    bool ok = true;
    int failed_condition = 0; // 1 = tangency values, 2 = normal outside allowed set, 0 = grid
    std::string detail;
};

CapCheck check_cap(const SupportSamples &p, double omega);

class Cap {
public:
    Cap() = default;

    const SupportSamples &samples() const { return p_; }
    double omega() const { return omega_; }
    double support(double t) const { return p_.support(t); }
    std::pair<Vec2, Vec2> vertex_pair(double t) const { return p_.vertex_pair(t); }
    ConvexPolygon polygon() const { return p_.polygon(); }
    double area() const;

    // A-(0), the right end of the bottom edge on y = 0.
    Vec2 a_minus0() const { return p_.vertex_pair(0.0).first; }
    // C+(omega) = v+(omega + pi/2).
    Vec2 c_plus_omega() const { return p_.vertex_pair(omega_ + kHalfPi).second; }

    friend Cap validate_cap(SupportSamples p, double omega);

private:
    SupportSamples p_;
    double omega_ = kHalfPi;
};

// Throws ValidationError naming the failed condition.
Cap validate_cap(SupportSamples p, double omega);

// Samples the polygon on its own normals, the required nodes and `grid`.
Cap cap_from_polygon(const ConvexPolygon &poly, double omega, std::vector<double> grid = {});

// Circumscribed polygon of the unit upper half-disk on cap_grid(pi/2, n).
Cap half_disk_cap(int n);

} // namespace sofa
