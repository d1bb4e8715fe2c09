#include "toricgen/geometry.hpp"

#include <algorithm>

namespace toricgen {

namespace {

// Monotone chain. Input must be sorted and duplicate-free; returns the
// extreme points in counterclockwise order starting at the lexicographic
// minimum. Collinear points are dropped (strict turns only).
std::vector<LatticePoint> hull_ccw(const std::vector<LatticePoint>& pts) {
    const std::size_t n = pts.size();
    if (n < 3) return pts;

    std::vector<LatticePoint> hull;
    hull.reserve(2 * n);
    // lower chain, left to right
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    // upper chain, right to left
    const std::size_t lower_size = hull.size() + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        const auto& p = pts[i];
        while (hull.size() >= lower_size && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    hull.pop_back();  // first point repeated at the end
    return hull;
}

FacetInequality facet_of_edge(const LatticePoint& v, const LatticePoint& w) {
    const LatticePoint e = w - v;
    LatticePoint normal{checked_neg(e.y), e.x};  // inward for counterclockwise order
    const Int g = gcd_int(normal.x, normal.y);
    normal = {normal.x / g, normal.y / g};
    return FacetInequality{normal, checked_neg(dot(v, normal))};
}

void check_polygon_invariants(const std::vector<LatticePoint>& vs,
                              const std::vector<FacetInequality>& facets) {
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t tight = 0;
        for (std::size_t f = 0; f < n; ++f) {
            if (!facets[f].satisfied_by(vs[i]))
                throw std::logic_error("polygon vertex violates a facet inequality");
            if (facets[f].tight_at(vs[i])) ++tight;
        }
        // exactly the two incident facets
        if (tight != 2) throw std::logic_error("polygon vertex not on exactly two facets");
    }
}

}  // namespace

LatticePolygon canonicalize(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw DegenerateInput("no vertices given");

    std::vector<LatticePoint> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<LatticePoint> hull = hull_ccw(pts);
    if (hull.size() < 3)
        throw DegenerateInput("input is a point or a segment, not a 2-dimensional polygon");

    LatticePolygon poly;
    poly.vertices_ = std::move(hull);

    const std::size_t n = poly.vertices_.size();
    poly.facets_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        poly.facets_.push_back(facet_of_edge(poly.vertices_[i], poly.vertices_[(i + 1) % n]));

    poly.bbox_min_ = poly.bbox_max_ = poly.vertices_.front();
    for (const auto& v : poly.vertices_) {
        poly.bbox_min_.x = std::min(poly.bbox_min_.x, v.x);
        poly.bbox_min_.y = std::min(poly.bbox_min_.y, v.y);
        poly.bbox_max_.x = std::max(poly.bbox_max_.x, v.x);
        poly.bbox_max_.y = std::max(poly.bbox_max_.y, v.y);
    }

    check_polygon_invariants(poly.vertices_, poly.facets_);
    return poly;
}

const std::vector<FacetInequality>& facet_inequalities(const LatticePolygon& poly) {
    return poly.facets();
}

std::vector<LatticePoint> lattice_points(const LatticePolygon& poly) {
    std::vector<LatticePoint> pts;
    const auto lo = poly.bbox_min();
    const auto hi = poly.bbox_max();
    for (Int x = lo.x; x <= hi.x; ++x) {
        for (Int y = lo.y; y <= hi.y; ++y) {
            const LatticePoint p{x, y};
            bool inside = true;
            for (const auto& f : poly.facets()) {
                if (!f.satisfied_by(p)) {
                    inside = false;
                    break;
                }
            }
            if (inside) pts.push_back(p);
        }
    }
    return pts;  // scan order is already lexicographic
}

Int boundary_lattice_point_count(const LatticePolygon& poly) {
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    Int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint e = vs[(i + 1) % n] - vs[i];
        count = checked_add(count, gcd_int(e.x, e.y));
    }
    return count;
}

LatticePolygon dilate(const LatticePolygon& poly, Int k) {
    if (k < 1) throw std::invalid_argument("dilation factor must be >= 1");

    // Scaling by k > 0 preserves canonical order, extremality and the
    // primitive facet normals; offsets scale by k.
    LatticePolygon out;
    out.vertices_.reserve(poly.vertices().size());
    for (const auto& v : poly.vertices()) out.vertices_.push_back(scaled(v, k));
    out.facets_.reserve(poly.facets().size());
    for (const auto& f : poly.facets())
        out.facets_.push_back(FacetInequality{f.normal, checked_mul(f.offset, k)});
    out.bbox_min_ = scaled(poly.bbox_min(), k);
    out.bbox_max_ = scaled(poly.bbox_max(), k);
    return out;
}

Int double_area(const LatticePolygon& poly) {
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    Int sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum = checked_add(sum, cross(vs[i], vs[(i + 1) % n]));
    return sum;
}

bool contains(const LatticePolygon& poly, const LatticePoint& p) {
    for (const auto& f : poly.facets())
        if (!f.satisfied_by(p)) return false;
    return true;
}

}  // namespace toricgen
