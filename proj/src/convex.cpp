#include "sofa/convex.hpp"

#include <algorithm>
#include <numeric>

namespace sofa {

namespace {

double normal_of_edge(Vec2 d) { return wrap_angle(std::atan2(d.y, d.x) - kHalfPi); }

double scale_of(const std::vector<Vec2> &pts) {
    double s = 0.0;
    for (const auto &p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return std::max(s, 1.0);
}

// Rotates vertices/normals so the smallest normal comes first.
void canonical_rotation(std::vector<Vec2> &v, std::vector<double> &n) {
    if (n.empty()) return;
    auto it = std::min_element(n.begin(), n.end());
    auto k = static_cast<std::ptrdiff_t>(it - n.begin());
    std::rotate(v.begin(), v.begin() + k, v.end());
    std::rotate(n.begin(), n.begin() + k, n.end());
}

} // namespace

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Vec2> pts) {
    if (pts.empty()) throw ValidationError("polygon needs at least one vertex");
    const double eps = 1e-13 * scale_of(pts);

    std::vector<Vec2> v;
    for (const auto &p : pts)
        if (v.empty() || norm(p - v.back()) > eps) v.push_back(p);
    while (v.size() > 1 && norm(v.front() - v.back()) <= eps) v.pop_back();

    ConvexPolygon out;
    if (v.size() == 1) {
        out.vertices_ = v;
        return out;
    }

    double twice_area = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) twice_area += cross(v[i], v[(i + 1) % v.size()]);
    if (twice_area < 0.0) std::reverse(v.begin(), v.end());

    // Drop collinear interior points; a fully collinear set collapses to a segment.
    bool changed = true;
    while (changed && v.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Vec2 a = v[(i + v.size() - 1) % v.size()], b = v[i], c = v[(i + 1) % v.size()];
            const Vec2 d1 = b - a, d2 = c - b;
            if (std::abs(cross(d1, d2)) <= eps * (norm(d1) + norm(d2)) && dot(d1, d2) > 0.0) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (std::abs(twice_area) <= eps * eps || v.size() == 2) {
        // Segment: keep the two extreme points along the dominant direction.
        auto [lo, hi] = std::minmax_element(v.begin(), v.end(), [&](Vec2 a, Vec2 b) {
            const Vec2 d = v.back() - v.front();
            return dot(a, d) < dot(b, d);
        });
        Vec2 a = *lo, b = *hi;
        if (norm(b - a) <= eps) {
            out.vertices_ = {a};
            return out;
        }
        out.vertices_ = {a, b};
        out.normals_ = {normal_of_edge(b - a), normal_of_edge(a - b)};
        canonical_rotation(out.vertices_, out.normals_);
        return out;
    }

    std::vector<double> n(v.size());
    double turning = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 d1 = v[(i + 1) % v.size()] - v[i];
        const Vec2 d2 = v[(i + 2) % v.size()] - v[(i + 1) % v.size()];
        if (cross(d1, d2) < -eps * (norm(d1) + norm(d2))) throw ValidationError("polygon is not convex");
        n[i] = normal_of_edge(d1);
        turning += std::atan2(cross(d1, d2), dot(d1, d2));
    }
    if (std::abs(turning - kTwoPi) > 1e-6) throw ValidationError("polygon is not simple");
    canonical_rotation(v, n);
    out.vertices_ = std::move(v);
    out.normals_ = std::move(n);
    return out;
}

ConvexPolygon ConvexPolygon::hull(std::vector<Vec2> pts) {
    if (pts.size() < 3) return from_vertices(std::move(pts));
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<Vec2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto &p : pts) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0.0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return from_vertices(std::move(h));
}

ConvexPolygon ConvexPolygon::from_chain(std::vector<Vec2> vertices, std::vector<double> normals) {
    if (vertices.size() != normals.size() && !(vertices.size() == 1 && normals.empty()))
        throw ValidationError("chain needs one normal per edge");
    ConvexPolygon out;
    out.vertices_ = std::move(vertices);
    out.normals_ = std::move(normals);
    canonical_rotation(out.vertices_, out.normals_);
    return out;
}

std::pair<Vec2, Vec2> ConvexPolygon::vertex_pair(double t) const {
    if (vertices_.empty()) throw ValidationError("empty polygon");
    if (normals_.empty()) return {vertices_[0], vertices_[0]};
    t = wrap_angle(t);
    const std::size_t m = normals_.size();
    auto it = std::upper_bound(normals_.begin(), normals_.end(), t);
    std::size_t k = it == normals_.begin() ? m - 1 : static_cast<std::size_t>(it - normals_.begin()) - 1;
    const std::size_t next = (k + 1) % m;
    if (same_angle(normals_[k], t)) return {vertices_[k], vertices_[next]};
    if (same_angle(normals_[next], t)) return {vertices_[next], vertices_[(next + 1) % m]};
    return {vertices_[next], vertices_[next]};
}

double ConvexPolygon::support(double t) const { return dot(vertex_pair(t).second, unit_u(t)); }

double ConvexPolygon::area() const {
    double s = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) s += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    return 0.5 * s;
}

double ConvexPolygon::perimeter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < normals_.size(); ++i) s += norm(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
    return s;
}

bool ConvexPolygon::contains(Vec2 q, double tol) const {
    if (vertices_.empty()) return false;
    if (normals_.empty()) return norm(q - vertices_[0]) <= tol;
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        if (dot(q - vertices_[i], unit_u(normals_[i])) > tol) return false;
    }
    return true;
}

ConvexPolygon ConvexPolygon::translated(Vec2 d) const {
    ConvexPolygon out = *this;
    for (auto &v : out.vertices_) v += d;
    return out;
}

SupportSamples::SupportSamples(std::vector<double> grid, std::vector<double> values, double omega)
    : grid_(std::move(grid)), values_(std::move(values)), omega_(omega) {
    if (grid_.size() != values_.size()) throw ValidationError("grid and values differ in length");
    if (grid_.size() < 3) throw ValidationError("support grid needs at least three angles");
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (!(grid_[i] >= 0.0 && grid_[i] < kTwoPi)) throw ValidationError("grid angle outside [0, 2pi)");
        if (!std::isfinite(values_[i])) throw ValidationError("non-finite support value");
        if (i > 0 && grid_[i] <= grid_[i - 1] + kAngleTol) throw ValidationError("grid must be strictly increasing");
    }
    corners_.resize(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        const std::size_t j = (i + 1) % grid_.size();
        const double gap = ccw_distance(grid_[i], grid_[j]);
        if (gap >= kPi - kGeomTol) throw ValidationError("grid has a gap of at least pi");
        corners_[i] = vertex_intersection(grid_[i], values_[i], grid_[j], values_[j]);
    }
}

SupportSamples SupportSamples::of_polygon(const ConvexPolygon &poly, std::vector<double> grid, double omega) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = poly.support(grid[i]);
    return SupportSamples(std::move(grid), std::move(values), omega);
}

SupportSamples SupportSamples::of_polygon(const ConvexPolygon &poly) {
    std::vector<double> grid = poly.normals();
    // Fill gaps of pi or more (segments, points) with extra angles.
    std::vector<double> filled;
    if (grid.empty()) grid = {0.0};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        filled.push_back(grid[i]);
        const double gap = ccw_distance(grid[i], grid[(i + 1) % grid.size()]);
        const double span = gap == 0.0 ? kTwoPi : gap;
        const int extra = static_cast<int>(std::floor(span / (0.5 * kPi)));
        for (int k = 1; k <= extra; ++k) {
            const double a = grid[i] + span * k / (extra + 1);
            filled.push_back(wrap_angle(a));
        }
    }
    std::sort(filled.begin(), filled.end());
    return of_polygon(poly, std::move(filled));
}

std::size_t SupportSamples::cell_of(double t) const {
    t = wrap_angle(t);
    auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
    if (it == grid_.begin()) return grid_.size() - 1;
    return static_cast<std::size_t>(it - grid_.begin()) - 1;
}

std::optional<std::size_t> SupportSamples::index_of(double t) const {
    const std::size_t c = cell_of(t);
    if (same_angle(grid_[c], t)) return c;
    const std::size_t n = (c + 1) % grid_.size();
    if (same_angle(grid_[n], t)) return n;
    return std::nullopt;
}

std::size_t SupportSamples::require_index(double t) const {
    auto i = index_of(t);
    if (!i) throw ValidationError("angle " + std::to_string(t) + " is not on the grid");
    return *i;
}

double SupportSamples::support(double t) const {
    if (auto i = index_of(t)) return values_[*i];
    return dot(corners_[cell_of(t)], unit_u(t));
}

std::pair<Vec2, Vec2> SupportSamples::vertex_pair(double t) const {
    if (auto i = index_of(t)) return {corners_[(*i + grid_.size() - 1) % grid_.size()], corners_[*i]};
    const Vec2 c = corners_[cell_of(t)];
    return {c, c};
}

double SupportSamples::edge_length(std::size_t i) const {
    const std::size_t prev = (i + grid_.size() - 1) % grid_.size();
    return dot(corners_[i] - corners_[prev], unit_v(grid_[i]));
}

double SupportSamples::max_radius() const {
    double r = 0.0;
    for (const auto &c : corners_) r = std::max(r, norm(c));
    return r;
}

ConvexPolygon SupportSamples::polygon() const {
    const double eps = 1e-12 * std::max(1.0, max_radius());
    std::vector<Vec2> verts;
    std::vector<double> normals;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        const double len = edge_length(i);
        if (len < -1e3 * eps) throw ValidationError("support values are not a support function");
        if (len > eps) {
            verts.push_back(corners_[(i + grid_.size() - 1) % grid_.size()]);
            normals.push_back(grid_[i]);
        }
    }
    if (verts.empty()) return ConvexPolygon::from_chain({corners_[0]}, {});
    return ConvexPolygon::from_chain(std::move(verts), std::move(normals));
}

double AngularMeasure::mass() const {
    return pair([](double) { return 1.0; });
}

double AngularMeasure::pair(const std::function<double(double)> &f) const {
    double s = 0.0;
    for (const auto &[t, w] : atoms) s += w * f(t);
    for (std::size_t i = 0; i + 1 < density.size(); ++i) {
        const auto &[a, da] = density[i];
        const auto &[b, db] = density[i + 1];
        s += 0.5 * (f(a) * da + f(b) * db) * (b - a);
    }
    return s;
}

AngularMeasure AngularMeasure::discretized() const {
    AngularMeasure out;
    out.atoms = atoms;
    for (std::size_t i = 0; i + 1 < density.size(); ++i) {
        const auto &[a, da] = density[i];
        const auto &[b, db] = density[i + 1];
        out.atoms.emplace_back(wrap_angle(0.5 * (a + b)), 0.5 * (da + db) * (b - a));
    }
    out.sort_atoms();
    return out;
}

Vec2 AngularMeasure::closure_defect() const {
    Vec2 s;
    for (const auto &[t, w] : discretized().atoms) s += w * unit_v(t);
    return s;
}

double AngularMeasure::atom_at(double t, double tol) const {
    double s = 0.0;
    for (const auto &[a, w] : atoms)
        if (same_angle(a, t, tol)) s += w;
    return s;
}

void AngularMeasure::sort_atoms() {
    for (auto &a : atoms) a.first = wrap_angle(a.first);
    std::sort(atoms.begin(), atoms.end());
}

double support_of_polygon(const ConvexPolygon &poly, double t) { return poly.support(t); }

std::pair<Vec2, Vec2> vertex_pair(const ConvexPolygon &poly, double t) { return poly.vertex_pair(t); }

Vec2 vertex_intersection(double t1, double p1, double t2, double p2) {
    const double s = std::sin(t2 - t1);
    if (std::abs(s) < 1e-12) throw ValidationError("parallel lines have no single intersection");
    return p1 * unit_u(t1) + ((p2 - p1 * std::cos(t2 - t1)) / s) * unit_v(t1);
}

Vec2 vertex_intersection(const SupportSamples &p, double t1, double t2) {
    return vertex_intersection(t1, p.support(t1), t2, p.support(t2));
}

bool same_grid(const SupportSamples &a, const SupportSamples &b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_angle(a.grid()[i], b.grid()[i])) return false;
    return true;
}

SupportSamples minkowski_combine(const SupportSamples &p1, const SupportSamples &p2, double lambda) {
    if (!same_grid(p1, p2) || std::abs(p1.omega() - p2.omega()) > kAngleTol)
        throw ValidationError("Minkowski combination needs identical grids");
    if (lambda < -kAngleTol || lambda > 1.0 + kAngleTol) throw ValidationError("lambda outside [0, 1]");
    std::vector<double> v(p1.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (1.0 - lambda) * p1.values()[i] + lambda * p2.values()[i];
    return SupportSamples(p1.grid(), std::move(v), p1.omega());
}

double width(const SupportSamples &p, double t) { return p.support(t) + p.support(t + kPi); }
double width(const ConvexPolygon &poly, double t) { return poly.support(t) + poly.support(t + kPi); }

double polygon_area(const ConvexPolygon &poly) { return poly.area(); }

AngularMeasure surface_measure(const ConvexPolygon &poly) {
    AngularMeasure m;
    const auto &v = poly.vertices();
    for (std::size_t i = 0; i < poly.edge_count(); ++i)
        m.atoms.emplace_back(poly.normals()[i], norm(v[(i + 1) % v.size()] - v[i]));
    return m;
}

AngularMeasure surface_measure(const SupportSamples &p) {
    AngularMeasure m;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double len = p.edge_length(i);
        if (len > 0.0) m.atoms.emplace_back(p.grid()[i], len);
    }
    return m;
}

double area_via_measure(const SupportSamples &p, const AngularMeasure &sigma) {
    return 0.5 * sigma.pair([&](double t) { return p.support(t); });
}

double mixed_volume(const SupportSamples &p1, const AngularMeasure &sigma2) { return area_via_measure(p1, sigma2); }

ConvexPolygon gauss_minkowski(const AngularMeasure &sigma, double tol) {
    AngularMeasure d = sigma.discretized();
    std::vector<std::pair<double, double>> atoms;
    for (const auto &[t, w] : d.atoms) {
        if (w < -tol) throw ValidationError("surface measure has a negative atom");
        if (w <= 0.0) continue;
        if (!atoms.empty() && same_angle(atoms.back().first, t)) atoms.back().second += w;
        else atoms.emplace_back(t, w);
    }
    if (atoms.size() > 1 && same_angle(atoms.front().first, atoms.back().first)) {
        atoms.front().second += atoms.back().second;
        atoms.pop_back();
    }
    Vec2 defect;
    for (const auto &[t, w] : atoms) defect += w * unit_v(t);
    if (norm(defect) > tol)
        throw ValidationError("closure violated: sum of w v_t = (" + std::to_string(defect.x) + ", " +
                              std::to_string(defect.y) + ")");
    if (atoms.empty()) return ConvexPolygon::from_chain({Vec2{}}, {});
    std::vector<Vec2> verts;
    std::vector<double> normals;
    Vec2 cur;
    for (const auto &[t, w] : atoms) {
        verts.push_back(cur);
        normals.push_back(t);
        cur += w * unit_v(t);
    }
    return ConvexPolygon::from_chain(std::move(verts), std::move(normals));
}

Polyline boundary_arc(const ConvexPolygon &poly, double t0, double t1, bool closed_start) {
    const double span = t1 - t0;
    if (span < -kAngleTol || span > kTwoPi + kAngleTol) throw ValidationError("boundary arc needs t1 in [t0, t0 + 2pi]");
    auto [vm, vp] = poly.vertex_pair(t0);
    Polyline out{closed_start ? vm : vp};
    std::vector<std::pair<double, std::size_t>> edges;
    for (std::size_t i = 0; i < poly.edge_count(); ++i) {
        double d = ccw_distance(t0, poly.normals()[i]);
        if (d <= kAngleTol || kTwoPi - d <= kAngleTol) d = closed_start ? 0.0 : kTwoPi;
        if (d <= span + kAngleTol && !(closed_start && d == 0.0 && span < 0.0)) edges.emplace_back(d, i);
    }
    std::sort(edges.begin(), edges.end());
    const auto &v = poly.vertices();
    for (const auto &[d, i] : edges) {
        if (closed_start && d == kTwoPi) continue;
        out.push_back(v[(i + 1) % v.size()]);
    }
    return out;
}

} // namespace sofa
