#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sofa/geometry.hpp"

namespace sofa {

// Counterclockwise vertex chain of a convex polygon. Segments and points are
// admitted. Vertices are rotated so that the outward normal angles of the
// edges (edge i runs from vertex i to vertex i+1) are ascending in [0, 2pi).
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    // Validates convexity; drops repeated and collinear points; accepts
    // either orientation.
    static ConvexPolygon from_vertices(std::vector<Vec2> pts);
    static ConvexPolygon hull(std::vector<Vec2> pts);

    // Trusted constructor: vertices[i] -> vertices[i+1] has normal normals[i],
    // normals ascending. Used by Gauss-Minkowski reconstruction.
    static ConvexPolygon from_chain(std::vector<Vec2> vertices, std::vector<double> normals);

    const std::vector<Vec2> &vertices() const { return vertices_; }
    const std::vector<double> &normals() const { return normals_; }
    bool empty() const { return vertices_.empty(); }
    std::size_t edge_count() const { return normals_.size(); }

    double support(double t) const;
    // (v-, v+) of the edge e(t); the shared corner twice between normals.
    std::pair<Vec2, Vec2> vertex_pair(double t) const;
    double area() const;
    double perimeter() const;
    bool contains(Vec2 q, double tol = kGeomTol) const;
    ConvexPolygon translated(Vec2 d) const;

private:
    std::vector<Vec2> vertices_;
    std::vector<double> normals_;
};

// Support values on an ordered angle grid. Between consecutive grid angles the
// body is taken to be the corner l(t_i) n l(t_{i+1}), so the samples describe
// exactly the polygon cut out by the tangent lines at the grid angles.
class SupportSamples {
public:
    SupportSamples() = default;
    SupportSamples(std::vector<double> grid, std::vector<double> values, double omega = 0.0);

    static SupportSamples of_polygon(const ConvexPolygon &poly, std::vector<double> grid, double omega = 0.0);
    // Grid = the polygon's own edge normals.
    static SupportSamples of_polygon(const ConvexPolygon &poly);

    const std::vector<double> &grid() const { return grid_; }
    const std::vector<double> &values() const { return values_; }
    double omega() const { return omega_; }
    std::size_t size() const { return grid_.size(); }

    std::optional<std::size_t> index_of(double t) const;
    std::size_t require_index(double t) const;

    double support(double t) const;
    std::pair<Vec2, Vec2> vertex_pair(double t) const;
    // Corner between grid angles i and i+1 (cyclic).
    const Vec2 &corner(std::size_t i) const { return corners_[i]; }
    // Signed edge length at grid angle i; negative means the values are not a
    // support function there.
    double edge_length(std::size_t i) const;
    ConvexPolygon polygon() const;
    double max_radius() const;

private:
    // Index i with grid[i] <= t < grid[i+1] cyclically.
    std::size_t cell_of(double t) const;

    std::vector<double> grid_;
    std::vector<double> values_;
    std::vector<Vec2> corners_;
    double omega_ = 0.0;
};

// Atoms plus sampled density (trapezoid between consecutive samples).
struct AngularMeasure {
    std::vector<std::pair<double, double>> atoms;
    std::vector<std::pair<double, double>> density;

    double mass() const;
    double pair(const std::function<double(double)> &f) const;
    // Density cells become atoms at cell midpoints carrying the cell mass.
    AngularMeasure discretized() const;
    // Sum of w v_t over the atoms (after discretization).
    Vec2 closure_defect() const;
    double atom_at(double t, double tol = kAngleTol) const;
    void sort_atoms();
};

double support_of_polygon(const ConvexPolygon &poly, double t);
std::pair<Vec2, Vec2> vertex_pair(const ConvexPolygon &poly, double t);

// l(t1) n l(t2) from support values alone.
Vec2 vertex_intersection(const SupportSamples &p, double t1, double t2);
Vec2 vertex_intersection(double t1, double p1, double t2, double p2);

SupportSamples minkowski_combine(const SupportSamples &p1, const SupportSamples &p2, double lambda);
bool same_grid(const SupportSamples &a, const SupportSamples &b);

double width(const SupportSamples &p, double t);
double width(const ConvexPolygon &poly, double t);

double polygon_area(const ConvexPolygon &poly);
AngularMeasure surface_measure(const ConvexPolygon &poly);
AngularMeasure surface_measure(const SupportSamples &p);
double area_via_measure(const SupportSamples &p, const AngularMeasure &sigma);
double mixed_volume(const SupportSamples &p1, const AngularMeasure &sigma2);

// Chains w_i v_{t_i} in increasing angle order starting at the origin.
ConvexPolygon gauss_minkowski(const AngularMeasure &sigma, double tol = kGeomTol);

// Boundary chain from v+(t0) (v-(t0) when closed_start) to v+(t1), t1 taken
// in [t0, t0 + 2pi].
Polyline boundary_arc(const ConvexPolygon &poly, double t0, double t1, bool closed_start = false);

} // namespace sofa
