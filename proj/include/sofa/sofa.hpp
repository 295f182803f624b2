#pragma once

#include <string>
#include <vector>

#include "sofa/cap.hpp"
#include "sofa/hallway.hpp"

namespace sofa {

struct NicheColumn {
    double x = 0.0;
    double y_lower = 0.0; // fan floor
    double y_upper = 0.0; // envelope of the inner-corner quadrants, >= y_lower
};

struct NicheRegion {
    std::vector<NicheColumn> columns;
    double dx = 0.0;
    double area = 0.0;

    bool empty() const { return area <= 0.0; }
    std::string to_csv() const;
};

struct SofaShape {
    Cap cap;
    NicheRegion niche;
    double area = 0.0;
    bool contained = true; // niche inside the cap; otherwise area is not a sofa area
};

// Vertical-slab scan of F n U_t Q-(t) over t_samples uniform angles in
// [0, omega] and x_samples slabs across the cap's horizontal extent.
NicheRegion niche(const Cap &cap, int t_samples, int x_samples);

// Highest point of the sampled quadrant union above abscissa x (or -inf).
double niche_ceiling(const Cap &cap, double x, int t_samples);

bool niche_contained(const Cap &cap, int t_samples);

SofaShape sofa_area(const Cap &cap, int t_samples = 4096, int x_samples = 4096);

// Cap = P_omega n (half-planes H(t, p(t)) over the J_omega samples); the
// sofa is that cap minus its niche. Values at angles outside J_omega are
// ignored.
SofaShape monotonize(const std::vector<double> &grid, const std::vector<double> &values, double omega,
                     int t_samples = 1024, int x_samples = 1024);
SofaShape monotonize(const SupportSamples &p, double omega, int t_samples = 1024, int x_samples = 1024);

bool injectivity_check(const Polyline &path, const Fan &fan);

struct BoundSearch {
    double step = 0.02;       // coarse grid step for corner positions
    double tol = 1e-10;       // refinement stopping size
    std::size_t budget = 200000; // max coarse evaluations
};

// Area of H n (intersection of the hallways L_t with inner corners at
// `corners`).
double hallway_intersection_area(const std::vector<double> &thetas, const std::vector<Vec2> &corners);

double polygonal_bound(const std::vector<double> &thetas, const BoundSearch &search = {});

} // namespace sofa
