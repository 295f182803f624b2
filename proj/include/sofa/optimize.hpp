#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sofa/cap.hpp"

namespace sofa {

// Concave quadratic c + b.w + 1/2 w'Qw over boundary weights w on
// j_omega_grid(omega, n), subject to A w = e and 0 <= w <= w_max.
struct QpProblem {
    double omega = kHalfPi;
    int n = 0;
    std::vector<double> grid;
    Eigen::MatrixXd Q;
    Eigen::VectorXd b;
    double c = 0.0;
    Eigen::MatrixXd A; // 2 x d
    Eigen::Vector2d e = Eigen::Vector2d::Ones();
    double w_max = 10.0;

    // Assembly diagnostics.
    double symmetry_defect = 0.0;
    double max_feasible_eigenvalue = 0.0; // on the null space of A
    double residual = 0.0;                // max |objective - A1| at random feasible points

    std::size_t dimension() const { return grid.size(); }
    double objective(const Eigen::VectorXd &w) const { return c + b.dot(w) + 0.5 * w.dot(Q * w); }
    Eigen::VectorXd gradient(const Eigen::VectorXd &w) const { return b + Q * w; }
};

// A1 as an exact quadratic polynomial of the weights: the edge chain with the
// closing bottom atoms, translated to standard position.
double a1_of_weights(const std::vector<double> &w, double omega, int n);

QpProblem assemble(double omega, int n, const Cap &anchor);

// Euclidean projection onto {A w = e, 0 <= w <= w_max}.
Eigen::VectorXd project_feasible(const QpProblem &p, const Eigen::VectorXd &y);

// Frank-Wolfe gap max_{w' feasible} grad.(w' - w), an upper bound on the
// distance to the optimal value.
double certificate(const QpProblem &p, const Eigen::VectorXd &w);

Eigen::VectorXd uniform_start(const QpProblem &p);

struct TraceRow {
    int iteration = 0;
    double objective = 0.0;
    double certificate = 0.0;
};

struct QpSolution {
    Eigen::VectorXd w;
    double value = 0.0;
    double certificate = 0.0;
    int iterations = 0;
    bool converged = false;
    bool monotone = true;
    double step = 0.0;
    std::vector<TraceRow> trace;

    std::string trace_csv() const;
    std::string measure_json(const QpProblem &p) const;
};

// Accelerated projected gradient ascent with step 1/L, L = twice the
// power-iteration estimate of the spectral radius of Q. A step that would lower
// the objective is rejected and the momentum restarted. Stops once the
// certificate is <= tol.
QpSolution solve(const QpProblem &p, const Eigen::VectorXd &start, int max_iters, double tol);

} // namespace sofa
