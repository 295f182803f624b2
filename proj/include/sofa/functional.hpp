#pragma once

#include <functional>
#include <vector>

#include "sofa/cap.hpp"
#include "sofa/convex.hpp"
#include "sofa/hallway.hpp"

namespace sofa {

// A1 = |K| - I(x_K) with the rotation path sampled at m uniform angles.
double a1(const Cap &cap, int m);
// Same functional with I(x_K) integrated piecewise between grid breakpoints,
// exact up to rounding for polygonal caps.
double a1_exact(const Cap &cap);
double rotation_path_area(const Cap &cap);

// Angles in [0, omega] where A+(t) or C+(t) can change.
std::vector<double> rotation_breakpoints(const SupportSamples &p);

struct BoundaryConstraints {
    double lower = 0.0; // integral of cos t over [0, omega]
    double upper = 0.0; // integral of cos(omega + pi/2 - t) over [pi/2, omega + pi/2]
};

BoundaryConstraints boundary_constraints(const AngularMeasure &beta, double omega);

// Surface measure restricted to J_omega: one atom per J_omega grid angle
// (zero weights kept so the atoms line up with the grid).
AngularMeasure boundary_measure(const Cap &cap);
std::vector<double> boundary_weights(const Cap &cap);

// Rebuilds the cap from its boundary measure. Constraint integrals within
// `tol` of 1 are rescaled half by half to exactly 1. The cap grid is `grid`
// when given, otherwise the atom angles plus the required nodes.
Cap cap_from_boundary(const AngularMeasure &beta, double omega, const std::vector<double> &grid = {},
                      double tol = 1e-6);
// Weights aligned with j_omega_grid(omega, n).
Cap cap_from_weights(const std::vector<double> &w, double omega, int n, double tol = 1e-6);

struct IotaMeasure {
    std::vector<double> angles;  // sample angles on J_omega
    std::vector<double> density; // i(t)
};

IotaMeasure iota(const Cap &cap);
// <f, iota_K> integrated piecewise.
double iota_pairing(const Cap &cap, const std::function<double(double)> &f);

Cap blend(const Cap &k1, const Cap &k2, double lambda);

double directional_derivative(const Cap &k1, const Cap &k2);
double area_derivative(const Cap &k1, const Cap &k2);
// Area between the upper boundary and the outer-corner path y_K, as
// 1/2 int g+(t)^2 over [0, omega] plus the tau term over [omega, omega + pi/2].
double mamikon_sweep(const Cap &cap);

struct ConcavityReport {
    std::vector<double> lambda;
    std::vector<double> value; // A1 along the blend
    std::vector<double> chord; // (1 - l) A1(K1) + l A1(K2)
    double max_violation = 0.0;      // max of chord - value
    double quadratic_residual = 0.0; // fit through l = 0, 1/2, 1, checked elsewhere
    bool concave = true;
    bool quadratic = true;
};

ConcavityReport concavity_probe(const Cap &k1, const Cap &k2, int samples, double tol = 1e-9);

} // namespace sofa
