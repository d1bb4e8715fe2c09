#include "toricgen/dual.hpp"

#include <algorithm>
#include <string>

namespace toricgen {

namespace {

std::string point_str(const LatticePoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

RationalPolygon canonicalize_rational(const std::vector<RationalPoint>& points) {
    if (points.empty()) throw DegenerateInput("no vertices given");

    std::vector<RationalPoint> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<RationalPoint> hull;
    if (pts.size() >= 3) {
        const Rational zero{0};
        hull.reserve(2 * pts.size());
        for (const auto& p : pts) {
            while (hull.size() >= 2 && !(cross(hull[hull.size() - 2], hull.back(), p) > zero))
                hull.pop_back();
            hull.push_back(p);
        }
        const std::size_t lower_size = hull.size() + 1;
        for (std::size_t i = pts.size() - 1; i-- > 0;) {
            const auto& p = pts[i];
            while (hull.size() >= lower_size && !(cross(hull[hull.size() - 2], hull.back(), p) > zero))
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
    } else {
        hull = pts;
    }
    if (hull.size() < 3)
        throw DegenerateInput("input is a point or a segment, not a 2-dimensional polygon");

    RationalPolygon poly;
    poly.vertices_ = std::move(hull);
    return poly;
}

RationalPolygon as_rational(const LatticePolygon& poly) {
    std::vector<RationalPoint> pts;
    pts.reserve(poly.vertices().size());
    for (const auto& v : poly.vertices()) pts.push_back({Rational(v.x), Rational(v.y)});
    return canonicalize_rational(pts);
}

LdpPolygon validate_ldp(const LatticePolygon& poly) {
    // Origin strictly interior: every facet inequality strict at 0, i.e.
    // 0 > -offset.
    for (const auto& f : poly.facets()) {
        if (f.offset <= 0)
            throw OriginNotInterior("the origin is not in the interior of the polygon");
    }
    for (const auto& v : poly.vertices()) {
        if (gcd_int(v.x, v.y) != 1)
            throw NonPrimitiveVertex("vertex " + point_str(v) + " is not primitive");
    }
    return LdpPolygon(poly);
}

RationalPolygon polar_dual(const RationalPolygon& poly) {
    // One dual vertex per edge (v, w): the solution of <v,y> = <w,y> = -1,
    // by Cramer's rule. For counterclockwise order with the origin interior
    // the determinant cross(v, w) is positive.
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    std::vector<RationalPoint> dual;
    dual.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = vs[i];
        const auto& w = vs[(i + 1) % n];
        const Rational det = cross(v, w);
        if (!(det > Rational(0)))
            throw OriginNotInterior("polar dual requires the origin strictly inside");
        dual.push_back({(v.y - w.y) / det, (w.x - v.x) / det});
    }
    return canonicalize_rational(dual);
}

RationalPolygon polar(const LdpPolygon& q) { return polar_dual(as_rational(q.polygon())); }

Int index(const RationalPolygon& polar_poly) {
    Int ell = 1;
    for (const auto& v : polar_poly.vertices()) {
        ell = lcm_int(ell, v.x.den);
        ell = lcm_int(ell, v.y.den);
    }
    return ell;
}

LatticePolygon dilated_polar(const LdpPolygon& q) {
    const RationalPolygon dual = polar(q);
    const Int ell = index(dual);
    std::vector<LatticePoint> pts;
    pts.reserve(dual.vertices().size());
    for (const auto& v : dual.vertices()) {
        const Rational sx = v.x * Rational(ell);
        const Rational sy = v.y * Rational(ell);
        if (!sx.is_integer() || !sy.is_integer())
            throw std::logic_error("index did not clear the polar's denominators");
        pts.push_back({sx.num, sy.num});
    }
    return canonicalize(pts);
}

}  // namespace toricgen
