// Shared fixtures and independent test oracles. Everything here reaches
// results by a different route than the library: containment by orientation
// predicates instead of facet systems, facets by the all-vertex-pairs scan,
// fibers by the quadratic double loop.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "toricgen/geometry.hpp"
#include "toricgen/ideal.hpp"

namespace tg = toricgen;

namespace fixtures {

// conv{(0,0),(d,0),(0,d)}: the d-uple Veronese triangle
inline std::vector<tg::LatticePoint> triangle(tg::Int d) {
    return {{0, 0}, {d, 0}, {0, d}};
}

inline std::vector<tg::LatticePoint> unit_square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

// conv{(0,0),(a,0),(b,1),(0,1)}: the rational normal scroll of type (a,b)
inline std::vector<tg::LatticePoint> scroll(tg::Int a, tg::Int b) {
    return {{0, 0}, {a, 0}, {b, 1}, {0, 1}};
}

// the reflexive hexagon and its polar
inline std::vector<tg::LatticePoint> hexagon() {
    return {{0, 1}, {1, 1}, {1, 0}, {0, -1}, {-1, -1}, {-1, 0}};
}
inline std::vector<tg::LatticePoint> hexagon_polar() {
    return {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
}

// LDP fixtures of index 2..5
inline std::vector<tg::LatticePoint> ldp_index2() { return {{0, 1}, {8, 1}, {-4, -1}}; }
inline std::vector<tg::LatticePoint> ldp_index3() {
    return {{0, 1}, {1, 1}, {1, 0}, {-2, -1}, {-3, -1}};
}
inline std::vector<tg::LatticePoint> ldp_index4() {
    return {{-1, 2}, {3, 2}, {-1, -1}, {-3, -2}};
}
inline std::vector<tg::LatticePoint> ldp_index5() { return {{0, 1}, {15, 1}, {-15, -2}}; }

}  // namespace fixtures

namespace oracles {

// Closed containment in the hull of `vertices` using orientation signs only;
// no facet inequalities involved.
inline bool in_hull(const std::vector<tg::LatticePoint>& vertices, const tg::LatticePoint& p) {
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        if (tg::cross(vertices[i], vertices[(i + 1) % n], p) < 0) return false;
    return true;
}

// Brute-force lattice point enumeration over the bounding box, independent
// of the facet system.
inline std::vector<tg::LatticePoint> points_bruteforce(
    const std::vector<tg::LatticePoint>& ccw_vertices) {
    tg::Int xmin = ccw_vertices[0].x, xmax = xmin, ymin = ccw_vertices[0].y, ymax = ymin;
    for (const auto& v : ccw_vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    std::vector<tg::LatticePoint> out;
    for (tg::Int x = xmin; x <= xmax; ++x)
        for (tg::Int y = ymin; y <= ymax; ++y)
            if (in_hull(ccw_vertices, {x, y})) out.push_back({x, y});
    return out;
}

// Normalized inequality <x,normal> >= rhs for set comparison.
struct Halfplane {
    tg::LatticePoint normal;
    tg::Int rhs;
    friend auto operator<=>(const Halfplane&, const Halfplane&) = default;
};

// The all-vertex-pairs facet scan: a segment between two vertices supports a
// facet iff the whole polygon lies in one closed half-plane of its line.
// Output reduced to primitive normals and deduplicated.
inline std::set<Halfplane> facets_all_pairs(const std::vector<tg::LatticePoint>& vertices) {
    std::set<Halfplane> out;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const tg::LatticePoint coef{vertices[i].y - vertices[j].y,
                                        vertices[j].x - vertices[i].x};
            const tg::Int cst = tg::dot(coef, vertices[j]);
            bool all_ge = true, all_le = true;
            for (const auto& p : vertices) {
                const tg::Int diff = tg::dot(coef, p) - cst;
                if (diff > 0) all_le = false;
                if (diff < 0) all_ge = false;
            }
            const tg::Int g = tg::gcd_int(coef.x, coef.y);
            if (g == 0) continue;
            const tg::LatticePoint prim{coef.x / g, coef.y / g};
            if (all_ge) out.insert({prim, cst / g});
            if (all_le) out.insert({{-prim.x, -prim.y}, -(cst / g)});
        }
    }
    return out;
}

// Quadratic double loop over the ordered monomial list: every unordered pair
// with equal sums. Cross-checks the hashed fiber grouping.
inline std::vector<tg::RelationColumn> relations_double_loop(const tg::MonomialBasis& basis) {
    const auto& ms = basis.monomials();
    std::vector<tg::RelationColumn> cols;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i].sum == ms[j].sum)
                cols.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
    return cols;
}

}  // namespace oracles

namespace rnd {

// det +-1 linear map plus translation
struct UnimodularMap {
    tg::Int a = 1, b = 0, c = 0, d = 1;
    tg::Int tx = 0, ty = 0;

    tg::LatticePoint apply(const tg::LatticePoint& p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }
};

inline UnimodularMap random_unimodular(std::mt19937& gen) {
    UnimodularMap m;
    std::uniform_int_distribution<int> shear(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int step = 0; step < 4; ++step) {
        const tg::Int s = shear(gen);
        if (coin(gen)) {  // row1 += s * row2
            m.a += s * m.c;
            m.b += s * m.d;
        } else {  // row2 += s * row1
            m.c += s * m.a;
            m.d += s * m.b;
        }
    }
    if (coin(gen)) {
        std::swap(m.a, m.c);
        std::swap(m.b, m.d);
    }
    std::uniform_int_distribution<int> shift(-5, 5);
    m.tx = shift(gen);
    m.ty = shift(gen);
    return m;
}

// Random canonical polygon with vertices in [-span, span]^2, or nullopt-like
// empty handling via retry in the caller.
inline std::vector<tg::LatticePoint> random_points(std::mt19937& gen, int span, int count) {
    std::uniform_int_distribution<int> coord(-span, span);
    std::vector<tg::LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pts.push_back({coord(gen), coord(gen)});
    return pts;
}

}  // namespace rnd
