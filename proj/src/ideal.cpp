#include "toricgen/ideal.hpp"

#include <algorithm>
#include <unordered_map>

namespace toricgen {

MonomialBasis::MonomialBasis(std::vector<LatticePoint> points) : points_(std::move(points)) {
    if (!std::is_sorted(points_.begin(), points_.end()) ||
        std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw std::invalid_argument("basis points must be sorted and duplicate-free");

    const auto n = static_cast<std::int32_t>(points_.size());
    monomials_.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (std::int32_t i = 0; i < n; ++i)
        for (std::int32_t j = i; j < n; ++j)
            monomials_.push_back(PairMonomial{i, j, points_[i] + points_[j]});

    // group by sum in one hashing pass, then order fibers by their key
    std::unordered_map<LatticePoint, std::vector<std::int32_t>, LatticePointHash> groups;
    groups.reserve(monomials_.size());
    for (std::size_t k = 0; k < monomials_.size(); ++k)
        groups[monomials_[k].sum].push_back(static_cast<std::int32_t>(k));

    fibers_.reserve(groups.size());
    for (auto& [sum, members] : groups) fibers_.push_back(Fiber{sum, std::move(members)});
    std::sort(fibers_.begin(), fibers_.end(),
              [](const Fiber& a, const Fiber& b) { return a.sum < b.sum; });
    // members are ascending already: monomials were scanned in index order
}

std::int32_t MonomialBasis::monomial_index(std::int32_t i, std::int32_t j) const {
    const auto n = static_cast<std::int32_t>(points_.size());
    if (i > j || i < 0 || j >= n) throw std::out_of_range("monomial_index");
    // row i starts after i rows of lengths n, n-1, ..., n-i+1
    return i * n - i * (i - 1) / 2 + (j - i);
}

std::int32_t MonomialBasis::point_index(const LatticePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return -1;
    return static_cast<std::int32_t>(it - points_.begin());
}

std::int32_t MonomialBasis::fiber_of(const LatticePoint& sum) const {
    auto it = std::lower_bound(fibers_.begin(), fibers_.end(), sum,
                               [](const Fiber& f, const LatticePoint& s) { return f.sum < s; });
    if (it == fibers_.end() || !(it->sum == sum)) return -1;
    return static_cast<std::int32_t>(it - fibers_.begin());
}

MonomialBasis build_basis(std::vector<LatticePoint> points) {
    return MonomialBasis(std::move(points));
}

IntMatrix RelationMatrix::to_matrix() const {
    IntMatrix m(num_monomials, static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        m.set(columns[c].plus, static_cast<int>(c), 1);
        m.set(columns[c].minus, static_cast<int>(c), -1);
    }
    return m;
}

RelationMatrix enumerate_relations(const MonomialBasis& basis, RelationMode mode) {
    RelationMatrix rel;
    rel.num_monomials = static_cast<std::int32_t>(basis.monomials().size());
    if (mode == RelationMode::all_pairs) {
        for (const auto& fiber : basis.fibers()) {
            const auto& ms = fiber.members;
            for (std::size_t a = 0; a < ms.size(); ++a)
                for (std::size_t b = a + 1; b < ms.size(); ++b)
                    rel.columns.push_back(RelationColumn{ms[a], ms[b]});
        }
        // same column order as a double loop over the ordered basis
        std::sort(rel.columns.begin(), rel.columns.end());
    } else {
        for (const auto& fiber : basis.fibers())
            for (std::size_t k = 1; k < fiber.members.size(); ++k)
                rel.columns.push_back(RelationColumn{fiber.members.front(), fiber.members[k]});
    }
    return rel;
}

bool koelman_gate(const LatticePolygon& poly) {
    return boundary_lattice_point_count(poly) >= 4;
}

std::vector<BinomialGenerator> minimal_generators(const MonomialBasis& basis) {
    std::vector<BinomialGenerator> gens;
    const auto& monomials = basis.monomials();
    for (const auto& fiber : basis.fibers()) {
        const auto lead = fiber.members.front();
        for (std::size_t k = 1; k < fiber.members.size(); ++k)
            gens.push_back(BinomialGenerator{monomials[lead], monomials[fiber.members[k]]});
    }
    return gens;
}

Int generator_count(const MonomialBasis& basis) {
    return static_cast<Int>(basis.monomials().size()) - static_cast<Int>(basis.fibers().size());
}

Int beta_formula(const LatticePolygon& poly) {
    const Int delta = static_cast<Int>(lattice_points(poly).size()) - 1;
    const Int dim_hp2 = checked_mul(delta + 2, delta + 1) / 2;
    const Int doubled = static_cast<Int>(lattice_points(dilate(poly, 2)).size());
    return checked_sub(dim_hp2, doubled);
}

VerifyReport verify_generators(const LatticePolygon& poly, const MonomialBasis& basis,
                               const std::vector<BinomialGenerator>& gens) {
    VerifyReport report;
    report.generators = static_cast<Int>(gens.size());

    // (a) membership: both monomials exist over the basis, differ, and share
    // a fiber (equal sums)
    report.membership = true;
    const auto n_points = static_cast<std::int32_t>(basis.points().size());
    for (const auto& g : gens) {
        const auto check = [&](const PairMonomial& m) {
            if (m.first < 0 || m.first > m.second || m.second >= n_points) return false;
            const std::int32_t idx = basis.monomial_index(m.first, m.second);
            return basis.monomials()[idx].sum == m.sum;
        };
        if (!check(g.plus) || !check(g.minus) || g.plus == g.minus || !(g.plus.sum == g.minus.sum)) {
            report.membership = false;
            report.detail = "binomial with mismatched or invalid monomials";
            break;
        }
    }

    // (b) independence: the generator columns have full column rank
    IntMatrix gen_matrix(static_cast<int>(basis.monomials().size()), static_cast<int>(gens.size()));
    if (report.membership) {
        for (std::size_t c = 0; c < gens.size(); ++c) {
            const auto plus = basis.monomial_index(gens[c].plus.first, gens[c].plus.second);
            const auto minus = basis.monomial_index(gens[c].minus.first, gens[c].minus.second);
            gen_matrix.set(plus, static_cast<int>(c), 1);
            gen_matrix.set(minus, static_cast<int>(c), -1);
        }
        report.generator_rank = rank(gen_matrix);
    }
    report.independence = report.membership && report.generator_rank == report.generators;

    // (c) completeness: the count reaches the exact rank of the all-pairs
    // relation matrix; with (b) this is span equality
    report.relation_rank = rank(enumerate_relations(basis, RelationMode::all_pairs).to_matrix());
    report.completeness = report.relation_rank == report.generators;

    // (d) count: agreement with the closed formula
    report.beta = beta_formula(poly);
    report.count_matches = report.beta == report.generators;

    return report;
}

}  // namespace toricgen
