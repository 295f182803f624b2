#include "sofa/geometry.hpp"

namespace sofa {

double curve_area(const Polyline &x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) s += cross(x[i], x[i + 1]);
    return 0.5 * s;
}

double closed_curve_area(const Polyline &x) {
    if (x.size() < 2) return 0.0;
    return curve_area(x) + segment_area(x.back(), x.front());
}

double polyline_length(const Polyline &x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) s += norm(x[i + 1] - x[i]);
    return s;
}

} // namespace sofa

namespace sofa {

std::vector<Vec2> clip_halfplane(const std::vector<Vec2> &poly, Vec2 n, double h) {
    std::vector<Vec2> out;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 a = poly[i], b = poly[(i + 1) % m];
        const double fa = dot(a, n) - h, fb = dot(b, n) - h;
        if (fa <= 0.0) out.push_back(a);
        if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) out.push_back(a + (fa / (fa - fb)) * (b - a));
    }
    return out;
}

double shoelace(const std::vector<Vec2> &poly) {
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * s;
}

} // namespace sofa
