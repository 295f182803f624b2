#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sofa/cap.hpp"

namespace sofa {

struct MaximizerSpec {
    double omega = kHalfPi;
    int n = 2000;
};

// Boundary weights of K_{omega,1} on j_omega_grid(omega, n). Each density
// cell becomes an atom at its midpoint; the atom is weighted so that the
// constraint integral over the cell is reproduced exactly.
std::vector<double> maximizer_weights(const MaximizerSpec &spec);
Cap build_maximizer(const MaximizerSpec &spec);

// Closed-form supports of K_{omega,1} on [0, omega] and on the shifted half.
double maximizer_support_lower(double omega, double t);
double maximizer_support_upper(double omega, double t); // p(t + pi/2)
inline double maximizer_value(double omega) { return 1.0 + 0.5 * omega * omega; }

// Random cap on the standard grid: nonnegative weights rescaled half by half
// onto the constraint set.
std::vector<double> random_boundary_weights(double omega, int n, std::mt19937_64 &rng);
Cap random_cap(double omega, int n, std::mt19937_64 &rng);

struct S1Curves {
    Polyline gamma_right; // from (1, 1) to (pi/2, 0)
    Polyline gamma_left;  // mirror image
    Polyline x;           // rotation path from (pi/2 - 1, 0)
    std::vector<std::pair<Vec2, Vec2>> segments;
};

// Integrates the two derivative formulas with Simpson steps; centred frame.
S1Curves s1_curves(int n);

struct MaximizerReport {
    double omega = 0.0;
    int n = 0;
    int trials = 0;
    double density_gap = 0.0;    // max |beta - iota| cell density on the open set
    double max_derivative = 0.0; // max |D A1(K; K')|
    double a1 = 0.0;
    double expected = 0.0;
    double max_trial_a1 = 0.0;
    int trials_above = 0; // trials with A1(K') > A1(K) + tol
    double tol = 1e-3;
    bool passed = false;

    std::string to_json() const;
    std::string to_csv() const;
};

MaximizerReport verify_maximizer(const MaximizerSpec &spec, int trials, std::uint64_t seed = 0, double tol = 1e-3);

} // namespace sofa
