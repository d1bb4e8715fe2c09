#include <map>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "toricgen/dual.hpp"
#include "toricgen/ideal.hpp"
#include "toricgen/notation.hpp"

using namespace toricgen;

namespace {

MonomialBasis basis_of(const std::vector<LatticePoint>& vertices) {
    return build_basis(lattice_points(canonicalize(vertices)));
}

std::multiset<std::size_t> fiber_size_multiset(const MonomialBasis& basis) {
    std::multiset<std::size_t> sizes;
    for (const auto& f : basis.fibers()) sizes.insert(f.members.size());
    return sizes;
}

}  // namespace

TEST_CASE("basis sizes") {
    CHECK(basis_of(fixtures::triangle(1)).monomials().size() == 6);
    CHECK(basis_of(fixtures::triangle(2)).monomials().size() == 21);
    for (Int d = 1; d <= 4; ++d) {
        const auto basis = basis_of(fixtures::triangle(d));
        const Int n = static_cast<Int>(basis.points().size());
        CHECK(static_cast<Int>(basis.monomials().size()) == n * (n + 1) / 2);
    }
}

TEST_CASE("basis ordering and fiber structure") {
    const auto basis = basis_of(fixtures::triangle(2));
    const auto& ms = basis.monomials();
    for (std::size_t k = 0; k + 1 < ms.size(); ++k) {
        const bool lex_less = ms[k].first < ms[k + 1].first ||
                              (ms[k].first == ms[k + 1].first && ms[k].second < ms[k + 1].second);
        CHECK(lex_less);
    }
    for (std::size_t k = 0; k < ms.size(); ++k) {
        CHECK(ms[k].first <= ms[k].second);
        CHECK(basis.monomial_index(ms[k].first, ms[k].second) == static_cast<std::int32_t>(k));
        CHECK(ms[k].sum == basis.points()[static_cast<std::size_t>(ms[k].first)] +
                               basis.points()[static_cast<std::size_t>(ms[k].second)]);
    }

    // fibers partition the monomial index set and their keys lie in 2P
    const auto doubled = lattice_points(dilate(canonicalize(fixtures::triangle(2)), 2));
    std::size_t members_total = 0;
    for (const auto& f : basis.fibers()) {
        members_total += f.members.size();
        CHECK(std::binary_search(doubled.begin(), doubled.end(), f.sum));
        for (auto m : f.members) CHECK(ms[static_cast<std::size_t>(m)].sum == f.sum);
    }
    CHECK(members_total == ms.size());
}

TEST_CASE("relation enumeration on the smallest fixtures") {
    // unit square: exactly one nontrivial fiber
    const auto square = basis_of(fixtures::scroll(1, 1));
    CHECK(enumerate_relations(square, RelationMode::all_pairs).columns.size() == 1);

    // first Veronese triangle: all fibers are singletons
    const auto tr1 = basis_of(fixtures::triangle(1));
    CHECK(enumerate_relations(tr1, RelationMode::all_pairs).columns.empty());

    // 2-uple Veronese: 6 star columns
    const auto tr2 = basis_of(fixtures::triangle(2));
    CHECK(enumerate_relations(tr2, RelationMode::fiber_star).columns.size() == 6);
}

TEST_CASE("all-pairs enumeration matches the double-loop oracle") {
    const std::vector<std::vector<LatticePoint>> inputs{
        fixtures::triangle(2), fixtures::scroll(2, 1), fixtures::hexagon_polar(),
        {{1, -2}, {0, -2}, {-1, 6}}};
    for (const auto& input : inputs) {
        const auto basis = basis_of(input);
        const auto all = enumerate_relations(basis, RelationMode::all_pairs);
        CHECK(all.columns == oracles::relations_double_loop(basis));

        Int expected_columns = 0;
        for (const auto& f : basis.fibers()) {
            const Int n = static_cast<Int>(f.members.size());
            expected_columns += n * (n - 1) / 2;
        }
        CHECK(static_cast<Int>(all.columns.size()) == expected_columns);
    }
}

TEST_CASE("koelman gate") {
    CHECK_FALSE(koelman_gate(canonicalize(fixtures::triangle(1))));
    CHECK(koelman_gate(canonicalize(fixtures::triangle(2))));
    CHECK(koelman_gate(canonicalize(fixtures::unit_square())));
}

TEST_CASE("minimal generator counts on the printed fixtures") {
    CHECK(minimal_generators(basis_of(fixtures::triangle(2))).size() == 6);
    CHECK(minimal_generators(basis_of(fixtures::triangle(3))).size() == 27);
    CHECK(minimal_generators(basis_of(fixtures::hexagon_polar())).size() == 9);
}

TEST_CASE("every generator is a vectorial relation") {
    for (const auto& g : minimal_generators(basis_of(fixtures::triangle(3)))) {
        CHECK(g.plus.sum == g.minus.sum);
        CHECK_FALSE(g.plus == g.minus);
    }
}

TEST_CASE("the unit square's single generator") {
    const auto basis = basis_of(fixtures::scroll(1, 1));
    const auto gens = minimal_generators(basis);
    REQUIRE(gens.size() == 1);
    CHECK(binomial_text(basis.points(), gens[0], false) ==
          "z_{(0,0)}z_{(1,1)}-z_{(0,1)}z_{(1,0)}");
}

TEST_CASE("beta formula") {
    const auto beta_of = [](const std::vector<LatticePoint>& vs) {
        return beta_formula(canonicalize(vs));
    };
    for (Int d = 2; d <= 5; ++d)
        CHECK(beta_of(fixtures::triangle(d)) == d * (d + 6) * (d * d - 1) / 8);
    CHECK(beta_of(fixtures::triangle(2)) == 6);
    CHECK(beta_of(fixtures::triangle(3)) == 27);

    const std::vector<std::pair<Int, Int>> scrolls{{1, 1}, {2, 1}, {3, 2}, {5, 4}};
    for (const auto& [a, b] : scrolls)
        CHECK(beta_of(fixtures::scroll(a, b)) == (a + b - 1) * (a + b) / 2);

    // the index-3 pentagon's dilated polar
    CHECK(beta_formula(dilated_polar(validate_ldp(canonicalize(fixtures::ldp_index3())))) == 646);
}

TEST_CASE("verify_generators accepts our output and localizes tampering") {
    const auto poly = canonicalize(fixtures::triangle(2));
    const auto basis = build_basis(lattice_points(poly));
    const auto gens = minimal_generators(basis);

    const auto ok = verify_generators(poly, basis, gens);
    CHECK(ok.membership);
    CHECK(ok.independence);
    CHECK(ok.completeness);
    CHECK(ok.count_matches);
    CHECK(ok.all_passed());
    CHECK(ok.beta == 6);
    CHECK(ok.generators == 6);

    // dropping a generator: still independent, no longer complete
    auto dropped = gens;
    dropped.pop_back();
    const auto short_report = verify_generators(poly, basis, dropped);
    CHECK(short_report.membership);
    CHECK(short_report.independence);
    CHECK_FALSE(short_report.completeness);
    CHECK(short_report.relation_rank == 6);
    CHECK_FALSE(short_report.count_matches);

    // duplicating a generator: dependent
    auto duplicated = gens;
    duplicated.push_back(gens.front());
    const auto dup_report = verify_generators(poly, basis, duplicated);
    CHECK(dup_report.membership);
    CHECK_FALSE(dup_report.independence);

    // mixing two fibers: not a relation at all
    auto corrupt = gens;
    corrupt[0].minus = basis.monomials()[basis.monomial_index(0, 0)];
    if (corrupt[0].minus == corrupt[0].plus)
        corrupt[0].minus = basis.monomials()[basis.monomial_index(1, 1)];
    const auto corrupt_report = verify_generators(poly, basis, corrupt);
    CHECK_FALSE(corrupt_report.membership);
    CHECK_FALSE(corrupt_report.all_passed());
}

TEST_CASE("count identity and normality on random gate-passing polygons") {
    std::mt19937 gen(808);
    std::uniform_int_distribution<int> span(2, 6);
    std::uniform_int_distribution<int> count(3, 10);
    int done = 0;
    while (done < 40) {
        LatticePolygon poly;
        try {
            poly = canonicalize(rnd::random_points(gen, span(gen), count(gen)));
        } catch (const DegenerateInput&) {
            continue;
        }
        if (!koelman_gate(poly)) continue;
        ++done;

        const auto basis = build_basis(lattice_points(poly));
        CHECK(generator_count(basis) == beta_formula(poly));
        CHECK(static_cast<Int>(minimal_generators(basis).size()) == beta_formula(poly));

        // normality: the fibers cover 2P exactly
        for (const auto& s : lattice_points(dilate(poly, 2))) CHECK(basis.fiber_of(s) >= 0);
        CHECK(static_cast<Int>(basis.fibers().size()) ==
              static_cast<Int>(lattice_points(dilate(poly, 2)).size()));
    }
}

TEST_CASE("generator lists are deterministic and unimodular-covariant") {
    const auto basis = basis_of(fixtures::hexagon_polar());
    const auto first = minimal_generators(basis);
    const auto second = minimal_generators(basis_of(fixtures::hexagon_polar()));
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(binomial_text(basis.points(), first[i], true) ==
              binomial_text(basis.points(), second[i], true));

    std::mt19937 gen(909);
    for (int iter = 0; iter < 10; ++iter) {
        const auto map = rnd::random_unimodular(gen);
        std::vector<LatticePoint> mapped;
        for (const auto& v : fixtures::hexagon_polar()) mapped.push_back(map.apply(v));
        const auto image_basis = basis_of(mapped);
        CHECK(minimal_generators(image_basis).size() == first.size());
        CHECK(fiber_size_multiset(image_basis) == fiber_size_multiset(basis));
    }
}
