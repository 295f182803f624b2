#include "sofa/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "sofa/functional.hpp"
#include "sofa/maximizer.hpp"

namespace sofa {

namespace {

constexpr double kGl[10][2] = {
    {-0.9739065285171717, 0.0666713443086881}, {-0.8650633666889845, 0.1494513491505806},
    {-0.6794095682990244, 0.2190863625159820}, {-0.4333953941292472, 0.2692667193099963},
    {-0.1488743389816312, 0.2955242247147529}, {0.1488743389816312, 0.2955242247147529},
    {0.4333953941292472, 0.2692667193099963},  {0.6794095682990244, 0.2190863625159820},
    {0.8650633666889845, 0.1494513491505806},  {0.9739065285171717, 0.0666713443086881}};

bool right_angle(double omega) { return std::abs(omega - kHalfPi) <= kAngleTol; }

// Precomputed geometry for evaluating A1 as a polynomial of the weights.
class ChainObjective {
public:
    ChainObjective(double omega, int n) : omega_(right_angle(omega) ? kHalfPi : omega), grid_(j_omega_grid(omega, n)) {
        const std::size_t d = grid_.size();
        for (double t : grid_) {
            dirs_.push_back(unit_v(t));
            normals_.push_back(unit_u(t));
        }
        if (omega_ == kHalfPi) {
            bottom_ = {1.5 * kPi};
        } else {
            bottom_ = {kPi + omega_, 1.5 * kPi};
        }
        for (double t : bottom_) {
            dirs_.push_back(unit_v(t));
            normals_.push_back(unit_u(t));
        }
        auto find = [&](double t) {
            for (std::size_t i = 0; i < d; ++i)
                if (std::abs(grid_[i] - t) <= kAngleTol) return i;
            throw Error("grid node missing");
        };
        i_omega_ = find(omega_);
        i_half_ = find(kHalfPi);
        i_zero_ = find(0.0);
        if (omega_ == kHalfPi) i_pi_ = find(kPi);
        // Pieces between consecutive lower nodes.
        for (std::size_t i = 0; grid_[i] < omega_ - kAngleTol; ++i) {
            Piece q;
            q.a = grid_[i];
            q.b = grid_[i + 1];
            q.ia = i + 1;
            q.ic = find(grid_[i] + kHalfPi) + 1;
            for (const auto &g : kGl) {
                const double t = 0.5 * (q.a + q.b) + 0.5 * (q.b - q.a) * g[0];
                q.u.push_back(unit_u(t));
                q.v.push_back(unit_v(t));
                q.wt.push_back(0.5 * (q.b - q.a) * g[1]);
            }
            pieces_.push_back(std::move(q));
        }
    }

    std::size_t dimension() const { return grid_.size(); }
    const std::vector<double> &grid() const { return grid_; }

    double operator()(const double *w) const {
        const std::size_t d = grid_.size();
        std::vector<double> all(w, w + d);
        Vec2 s;
        for (std::size_t i = 0; i < d; ++i) s += w[i] * dirs_[i];
        if (omega_ == kHalfPi) {
            all.push_back(-s.x);
        } else {
            const double s1 = s.y / std::cos(omega_);
            all.push_back(s1);
            all.push_back(-s.x - s1 * std::sin(omega_));
        }
        // Chain vertices: V[k] starts edge k.
        std::vector<Vec2> V(all.size() + 1);
        for (std::size_t k = 0; k < all.size(); ++k) V[k + 1] = V[k] + all[k] * dirs_[k];
        auto p_at = [&](std::size_t k) { return dot(V[k], normals_[k]); };
        Vec2 shift;
        if (omega_ == kHalfPi) {
            const double p0 = p_at(i_zero_), ppi = p_at(i_pi_);
            shift = {-0.5 * (p0 - ppi), 1.0 - p_at(i_half_)};
        } else {
            const double ry = 1.0 - p_at(i_half_);
            const double rw = 1.0 - p_at(i_omega_);
            shift = {(rw - ry * std::sin(omega_)) / std::cos(omega_), ry};
        }
        double area = 0.0;
        for (std::size_t k = 0; k < all.size(); ++k) area += 0.5 * (p_at(k) + dot(shift, normals_[k])) * all[k];
        double path = 0.0;
        for (const Piece &q : pieces_) {
            const Vec2 A = V[q.ia] + shift, C = V[q.ic] + shift, CA = C - A;
            for (std::size_t j = 0; j < q.wt.size(); ++j) {
                const double pt = dot(A, q.u[j]), pq = dot(C, q.v[j]);
                const double g = dot(CA, q.v[j]), h = -dot(CA, q.u[j]);
                path += q.wt[j] * 0.5 * ((pt - 1.0) * (h - 1.0) + (pq - 1.0) * (g - 1.0));
            }
        }
        return area - path;
    }

private:
    struct Piece {
        double a = 0, b = 0;
        std::size_t ia = 0, ic = 0;
        std::vector<Vec2> u, v;
        std::vector<double> wt;
    };

    double omega_;
    std::vector<double> grid_;
    std::vector<double> bottom_;
    std::vector<Vec2> dirs_, normals_;
    std::size_t i_omega_ = 0, i_half_ = 0, i_zero_ = 0, i_pi_ = 0;
    std::vector<Piece> pieces_;
};

Eigen::MatrixXd constraint_matrix(double omega, const std::vector<double> &grid) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2, static_cast<Eigen::Index>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const auto k = static_cast<Eigen::Index>(i);
        if (t <= omega + kAngleTol) A(0, k) = std::cos(t);
        if (t >= kHalfPi - kAngleTol) A(1, k) = std::cos(omega + kHalfPi - t);
    }
    // Exact zeros where the cosine vanishes.
    for (Eigen::Index k = 0; k < A.cols(); ++k)
        for (Eigen::Index r = 0; r < 2; ++r)
            if (std::abs(A(r, k)) < 1e-12) A(r, k) = 0.0;
    return A;
}

// Index sets of one constraint row (coefficients > 0) and of free coordinates.
std::vector<Eigen::Index> row_items(const QpProblem &p, int r) {
    std::vector<Eigen::Index> out;
    for (Eigen::Index k = 0; k < p.A.cols(); ++k)
        if (p.A(r, k) > 0.0) out.push_back(k);
    return out;
}

bool is_free(const QpProblem &p, Eigen::Index k) { return p.A(0, k) == 0.0 && p.A(1, k) == 0.0; }

} // namespace

double a1_of_weights(const std::vector<double> &w, double omega, int n) {
    require_omega(omega);
    ChainObjective f(omega, n);
    if (w.size() != f.dimension()) throw ValidationError("weight vector does not match the grid");
    return f(w.data());
}

QpProblem assemble(double omega, int n, const Cap &anchor) {
    require_omega(omega);
    if (n < 1) throw ValidationError("n must be positive");
    QpProblem p;
    p.omega = right_angle(omega) ? kHalfPi : omega;
    p.n = n;
    p.grid = j_omega_grid(p.omega, n);
    const auto d = static_cast<Eigen::Index>(p.grid.size());
    p.A = constraint_matrix(p.omega, p.grid);

    if (std::abs(anchor.omega() - p.omega) > kAngleTol) throw ValidationError("anchor has a different omega");
    const std::vector<double> w0v = boundary_weights(anchor);
    if (static_cast<Eigen::Index>(w0v.size()) != d) throw ValidationError("anchor is not on the standard grid");
    const Eigen::VectorXd w0 = Eigen::Map<const Eigen::VectorXd>(w0v.data(), d);
    if ((p.A * w0 - p.e).cwiseAbs().maxCoeff() > 1e-6 || w0.minCoeff() < -kGeomTol)
        throw ValidationError("anchor is not feasible");

    // Orthonormal basis of the null space of A.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(p.A.transpose());
    const Eigen::MatrixXd full = qr.householderQ();
    const Eigen::MatrixXd N = full.rightCols(d - 2);
    const Eigen::Index k = N.cols();

    const ChainObjective f(p.omega, n);
    // The extension of A1 to the affine hull is polynomial, so a unit
    // step keeps the polarization well conditioned.
    const double eps = 1.0;
    const double f0 = f(w0.data());
    std::vector<double> fp(k), fm(k);
    Eigen::VectorXd tmp(d);
    for (Eigen::Index i = 0; i < k; ++i) {
        tmp = w0 + eps * N.col(i);
        fp[i] = f(tmp.data());
        tmp = w0 - eps * N.col(i);
        fm[i] = f(tmp.data());
    }
    Eigen::VectorXd g(k);
    Eigen::MatrixXd H(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        g(i) = (fp[i] - fm[i]) / (2.0 * eps);
        H(i, i) = (fp[i] - 2.0 * f0 + fm[i]) / (eps * eps);
    }
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            tmp = w0 + eps * (N.col(i) + N.col(j));
            const double v = (f(tmp.data()) - fp[i] - fp[j] + f0) / (eps * eps);
            H(i, j) = v;
            H(j, i) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    p.max_feasible_eigenvalue = es.eigenvalues().maxCoeff();

    p.Q = N * H * N.transpose();
    p.Q = 0.5 * (p.Q + p.Q.transpose());
    p.symmetry_defect = (H - H.transpose()).cwiseAbs().maxCoeff();
    const Eigen::VectorXd Ng = N * g;
    p.b = Ng - p.Q * w0;
    p.c = f0 - Ng.dot(w0) + 0.5 * w0.dot(p.Q * w0);

    std::mt19937_64 rng(12345);
    double scale = std::max(1.0, std::abs(f0));
    for (int trial = 0; trial < 5; ++trial) {
        const std::vector<double> wr = random_boundary_weights(p.omega, n, rng);
        const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(wr.data(), d);
        const double ref = a1_exact(cap_from_weights(wr, p.omega, n));
        p.residual = std::max(p.residual, std::abs(p.objective(w) - ref) / scale);
    }
    if (p.residual > 1e-6) throw Error("quadratic assembly residual too large: " + std::to_string(p.residual));
    return p;
}

Eigen::VectorXd project_feasible(const QpProblem &p, const Eigen::VectorXd &y) {
    Eigen::VectorXd w = y.cwiseMax(0.0).cwiseMin(p.w_max);
    // The rows have disjoint supports, so the projection splits into one
    // monotone scalar equation per row in its multiplier.
    for (int r = 0; r < 2; ++r) {
        const std::vector<Eigen::Index> items = row_items(p, r);
        auto level = [&](double lam) {
            double s = 0.0;
            for (Eigen::Index i : items) s += p.A(r, i) * std::clamp(y(i) - lam * p.A(r, i), 0.0, p.w_max);
            return s;
        };
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (Eigen::Index i : items) {
            const double a = p.A(r, i);
            const double l = (y(i) - p.w_max) / a, h = y(i) / a;
            lo = first ? l : std::min(lo, l);
            hi = first ? h : std::max(hi, h);
            first = false;
        }
        if (level(lo) < p.e(r)) throw ValidationError("constraint set is empty under the box bound");
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
            const double mid = 0.5 * (lo + hi);
            (level(mid) > p.e(r) ? lo : hi) = mid;
        }
        // Solve exactly on the free set identified by the bracket.
        const double lam = 0.5 * (lo + hi);
        double fixed = 0.0, aa = 0.0, ay = 0.0;
        for (Eigen::Index i : items) {
            const double a = p.A(r, i), v = y(i) - lam * a;
            if (v <= 0.0) continue;
            if (v >= p.w_max) {
                fixed += a * p.w_max;
            } else {
                aa += a * a;
                ay += a * y(i);
            }
        }
        const double lam_exact = aa > 0.0 ? (ay + fixed - p.e(r)) / aa : lam;
        for (Eigen::Index i : items) w(i) = std::clamp(y(i) - lam_exact * p.A(r, i), 0.0, p.w_max);
    }
    return w;
}

double certificate(const QpProblem &p, const Eigen::VectorXd &w) {
    const Eigen::VectorXd g = p.gradient(w);
    Eigen::VectorXd s = Eigen::VectorXd::Zero(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i)
        if (is_free(p, i) && g(i) > 0.0) s(i) = p.w_max;
    // Fractional knapsack per row: fill by gain per unit of constraint mass.
    for (int r = 0; r < 2; ++r) {
        std::vector<Eigen::Index> items = row_items(p, r);
        std::sort(items.begin(), items.end(),
                  [&](Eigen::Index a, Eigen::Index b) { return g(a) / p.A(r, a) > g(b) / p.A(r, b); });
        double left = p.e(r);
        for (Eigen::Index i : items) {
            if (left <= 0.0) break;
            const double take = std::min(p.w_max, left / p.A(r, i));
            s(i) = take;
            left -= take * p.A(r, i);
        }
    }
    return std::max(0.0, g.dot(s - w));
}

Eigen::VectorXd uniform_start(const QpProblem &p) {
    const Eigen::Index d = p.A.cols();
    Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
    const double lower = p.A.row(0).sum(), upper = p.A.row(1).sum();
    for (Eigen::Index i = 0; i < d; ++i) {
        if (p.A(0, i) > 0.0) w(i) = p.e(0) / lower;
        else if (p.A(1, i) > 0.0) w(i) = p.e(1) / upper;
        else w(i) = p.e(0) / lower;
    }
    return w;
}

QpSolution solve(const QpProblem &p, const Eigen::VectorXd &start, int max_iters, double tol) {
    if (start.size() != p.A.cols()) throw ValidationError("start does not match the problem dimension");
    if ((p.A * start - p.e).cwiseAbs().maxCoeff() > 1e-6 || start.minCoeff() < -kGeomTol ||
        start.maxCoeff() > p.w_max + kGeomTol)
        throw ValidationError("start is not feasible");

    // Spectral radius of Q by power iteration.
    Eigen::VectorXd x = Eigen::VectorXd::Ones(start.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) += 0.01 * static_cast<double>(i % 7);
    x.normalize();
    double rho = 0.0;
    for (int it = 0; it < 500; ++it) {
        Eigen::VectorXd y = p.Q * x;
        const double nrm = y.norm();
        if (nrm == 0.0) break;
        const double prev = rho;
        rho = nrm;
        x = y / nrm;
        if (std::abs(rho - prev) <= 1e-10 * rho) break;
    }
    const double L = std::max(rho, 1e-12) / 0.5;

    QpSolution s;
    s.step = 1.0 / L;
    s.w = start;
    s.value = p.objective(s.w);
    s.certificate = certificate(p, s.w);
    s.trace.push_back({0, s.value, s.certificate});
    // Accelerated steps with a monotone safeguard: the iterate only moves to
    // the extrapolated candidate when the objective does not drop, and the
    // momentum restarts otherwise.
    Eigen::VectorXd y = s.w, prev = s.w;
    double tk = 1.0;
    for (int it = 1; it <= max_iters && s.certificate > tol; ++it) {
        const Eigen::VectorXd z = project_feasible(p, y + s.step * p.gradient(y));
        const double fz = p.objective(z);
        const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * tk * tk));
        prev = s.w;
        const bool accept = fz >= s.value;
        if (accept) {
            s.w = z;
            s.value = fz;
            y = s.w + ((tk - 1.0) / tn) * (s.w - prev);
            tk = tn;
        } else {
            y = s.w;
            tk = 1.0;
        }
        s.certificate = certificate(p, s.w);
        s.iterations = it;
        s.trace.push_back({it, s.value, s.certificate});
    }
    s.converged = s.certificate <= tol;
    return s;
}

std::string QpSolution::trace_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "iteration,objective,certificate\n";
    for (const TraceRow &r : trace) os << r.iteration << ',' << r.objective << ',' << r.certificate << '\n';
    return os.str();
}

std::string QpSolution::measure_json(const QpProblem &p) const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"omega\": " << p.omega << ", \"n\": " << p.n << ", \"value\": " << value
       << ", \"certificate\": " << certificate << ", \"atoms\": [";
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
        if (i) os << ", ";
        os << '[' << p.grid[i] << ", " << w(static_cast<Eigen::Index>(i)) << ']';
    }
    os << "]}";
    return os.str();
}

} // namespace sofa
