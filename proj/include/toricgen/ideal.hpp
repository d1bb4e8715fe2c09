#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricgen/exactlinalg.hpp"
#include "toricgen/geometry.hpp"

namespace toricgen {

// Degree-2 monomial z_p * z_q as an unordered pair of indices into the
// ordered lattice-point list, first <= second, with the componentwise sum
// of the two points cached.
struct PairMonomial {
    std::int32_t first{0};
    std::int32_t second{0};
    LatticePoint sum;

    friend bool operator==(const PairMonomial& a, const PairMonomial& b) {
        return a.first == b.first && a.second == b.second;
    }
};

struct Fiber {
    LatticePoint sum;
    std::vector<std::int32_t> members;  // monomial indices, ascending
};

// The ordered basis of degree-2 monomials over P's lattice points, grouped
// into fibers by monomial sum. Monomial k <-> pair (i,j), i <= j, enumerated
// lexicographically, which is also the canonical monomial order.
class MonomialBasis {
public:
    explicit MonomialBasis(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& points() const { return points_; }
    const std::vector<PairMonomial>& monomials() const { return monomials_; }
    const std::vector<Fiber>& fibers() const { return fibers_; }  // sorted by sum

    // index of the monomial with point indices i <= j
    std::int32_t monomial_index(std::int32_t i, std::int32_t j) const;

    // index of a lattice point of P, or -1
    std::int32_t point_index(const LatticePoint& p) const;

    // fiber index of a sum point, or -1
    std::int32_t fiber_of(const LatticePoint& sum) const;

private:
    std::vector<LatticePoint> points_;
    std::vector<PairMonomial> monomials_;
    std::vector<Fiber> fibers_;
};

MonomialBasis build_basis(std::vector<LatticePoint> points);

// z_plus - z_minus with plus.sum == minus.sum; plus is the fiber's leading
// (canonically smallest) monomial in the sets this library emits.
struct BinomialGenerator {
    PairMonomial plus;
    PairMonomial minus;

    friend bool operator==(const BinomialGenerator&, const BinomialGenerator&) = default;
};

// Column (plus, minus): +1 in row `plus`, -1 in row `minus`, plus < minus
// as monomial indices.
struct RelationColumn {
    std::int32_t plus{0};
    std::int32_t minus{0};

    friend bool operator==(const RelationColumn&, const RelationColumn&) = default;
    friend auto operator<=>(const RelationColumn&, const RelationColumn&) = default;
};

struct RelationMatrix {
    std::int32_t num_monomials{0};
    std::vector<RelationColumn> columns;

    IntMatrix to_matrix() const;
};

enum class RelationMode {
    all_pairs,   // one column per unordered pair of monomials sharing a fiber
    fiber_star,  // one column per non-leading monomial, linked to the leader
};

RelationMatrix enumerate_relations(const MonomialBasis& basis, RelationMode mode);

// True iff P has at least 4 boundary lattice points, the hypothesis under
// which the quadratic binomials are guaranteed to generate the whole ideal.
bool koelman_gate(const LatticePolygon& poly);

// The fiber-star generating set: per fiber of size n, the n-1 binomials
// leading - other. Count = |monomials| - |fibers|.
std::vector<BinomialGenerator> minimal_generators(const MonomialBasis& basis);

// Number of binomials produced by minimal_generators, without materializing
// them.
Int generator_count(const MonomialBasis& basis);

// The closed-form minimal-system cardinality
//   beta(P) = C(delta+2, 2) - #(2P cap Z^2),   delta = #(P cap Z^2) - 1,
// computed independently of the fiber construction via dilate + point scan.
Int beta_formula(const LatticePolygon& poly);

struct VerifyReport {
    bool membership = false;   // each binomial's monomials share a fiber
    bool independence = false; // rank of the generator columns == count
    bool completeness = false; // rank of the all-pairs matrix == count
    bool count_matches = false;
    Int generator_rank = 0;
    Int relation_rank = 0;
    Int beta = 0;
    Int generators = 0;
    std::string detail;  // first failed membership check, if any

    bool all_passed() const { return membership && independence && completeness && count_matches; }
};

// Validation harness, applicable to our own output and to externally
// supplied generator lists.
VerifyReport verify_generators(const LatticePolygon& poly, const MonomialBasis& basis,
                               const std::vector<BinomialGenerator>& gens);

}  // namespace toricgen
