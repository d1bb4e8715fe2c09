#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "toricgen/int_math.hpp"

namespace toricgen {

// A point of Z^2. Default comparison is lexicographic (x, then y), which is
// the canonical point order everywhere in this project.
struct LatticePoint {
    Int x{0};
    Int y{0};

    friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const {
        return {checked_add(x, o.x), checked_add(y, o.y)};
    }
    LatticePoint operator-(const LatticePoint& o) const {
        return {checked_sub(x, o.x), checked_sub(y, o.y)};
    }
};

inline LatticePoint scaled(const LatticePoint& p, Int k) {
    return {checked_mul(p.x, k), checked_mul(p.y, k)};
}

inline Int dot(const LatticePoint& a, const LatticePoint& b) {
    return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y));
}

inline Int cross(const LatticePoint& a, const LatticePoint& b) {
    return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

// Orientation of the turn o -> a -> b: positive = counterclockwise.
inline Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return cross(a - o, b - o);
}

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const {
        std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(p.y) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// One facet of a lattice polygon: <x, normal> >= -offset, with the normal
// primitive and inward-pointing.
struct FacetInequality {
    LatticePoint normal;
    Int offset{0};

    friend bool operator==(const FacetInequality&, const FacetInequality&) = default;

    bool satisfied_by(const LatticePoint& p) const {
        return dot(p, normal) >= checked_neg(offset);
    }
    bool tight_at(const LatticePoint& p) const { return dot(p, normal) == checked_neg(offset); }
};

// Convex lattice polygon in canonical form: vertices are exactly the extreme
// points, in counterclockwise order, starting at the lexicographic minimum.
// Construct through canonicalize() or dilate().
class LatticePolygon {
public:
    LatticePolygon() = default;  // empty until assigned from canonicalize/dilate

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<FacetInequality>& facets() const { return facets_; }
    LatticePoint bbox_min() const { return bbox_min_; }
    LatticePoint bbox_max() const { return bbox_max_; }

    friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    friend LatticePolygon canonicalize(const std::vector<LatticePoint>&);
    friend LatticePolygon dilate(const LatticePolygon&, Int);

    std::vector<LatticePoint> vertices_;
    std::vector<FacetInequality> facets_;
    LatticePoint bbox_min_;
    LatticePoint bbox_max_;
};

// Convex hull of the input in canonical order. Duplicates, interior points
// and points lying on edges are discarded. Throws DegenerateInput if the
// hull is a point or a segment.
LatticePolygon canonicalize(const std::vector<LatticePoint>& points);

// One inequality per edge, read off the canonical cyclic order.
const std::vector<FacetInequality>& facet_inequalities(const LatticePolygon& poly);

// All points of P (closed) intersected with Z^2, lexicographically sorted:
// a bounding-box scan filtered by the facet inequalities.
std::vector<LatticePoint> lattice_points(const LatticePolygon& poly);

// Number of lattice points on the boundary: sum of gcd(|dx|,|dy|) over edges.
Int boundary_lattice_point_count(const LatticePolygon& poly);

// The polygon k*P, k >= 1.
LatticePolygon dilate(const LatticePolygon& poly, Int k);

// Twice the area (shoelace sum); a positive integer for any lattice polygon.
Int double_area(const LatticePolygon& poly);

// Closed membership test via the facet system.
bool contains(const LatticePolygon& poly, const LatticePoint& p);

}  // namespace toricgen
