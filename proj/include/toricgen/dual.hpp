#pragma once

#include <vector>

#include "toricgen/geometry.hpp"
#include "toricgen/rational.hpp"

namespace toricgen {

// Convex polygon with exact rational vertices, same canonical convention as
// LatticePolygon (extreme points, counterclockwise, lexicographic minimum
// first). Polar duals live here.
class RationalPolygon {
public:
    const std::vector<RationalPoint>& vertices() const { return vertices_; }

    friend bool operator==(const RationalPolygon& a, const RationalPolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    RationalPolygon() = default;
    friend RationalPolygon canonicalize_rational(const std::vector<RationalPoint>&);

    std::vector<RationalPoint> vertices_;
};

RationalPolygon canonicalize_rational(const std::vector<RationalPoint>& points);
RationalPolygon as_rational(const LatticePolygon& poly);

// A lattice polygon with the origin strictly interior and all vertices
// primitive. Construct through validate_ldp().
class LdpPolygon {
public:
    const LatticePolygon& polygon() const { return polygon_; }

private:
    explicit LdpPolygon(LatticePolygon p) : polygon_(std::move(p)) {}
    friend LdpPolygon validate_ldp(const LatticePolygon&);

    LatticePolygon polygon_;
};

// Throws OriginNotInterior / NonPrimitiveVertex (naming the vertex).
LdpPolygon validate_ldp(const LatticePolygon& poly);

// Polar dual {y : <x,y> >= -1 for all x in Q}; requires the origin strictly
// inside Q, which makes the dual bounded with one vertex per edge of Q.
RationalPolygon polar_dual(const RationalPolygon& poly);
RationalPolygon polar(const LdpPolygon& q);

// Least k > 0 with k * vertices integral: lcm of the reduced denominators.
Int index(const RationalPolygon& polar_poly);

// The lattice polygon ell * polar(Q), where ell = index(polar(Q)).
LatticePolygon dilated_polar(const LdpPolygon& q);

}  // namespace toricgen
