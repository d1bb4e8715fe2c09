#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toricgen/ideal.hpp"

namespace toricgen {

// Textual form of degree-2 monomials and binomials in the homogeneous
// coordinates z_{(i,j)}.

// "z_{(0,0)}z_{(1,1)}"; with collapse_squares, "z_{(1,0)}^2" for repeated
// factors.
std::string monomial_text(const std::vector<LatticePoint>& points, const PairMonomial& m,
                          bool collapse_squares);

// "z_{(0,0)}z_{(1,1)}-z_{(0,1)}z_{(1,0)}"
std::string binomial_text(const std::vector<LatticePoint>& points, const BinomialGenerator& g,
                          bool collapse_squares);

// A binomial as written, before resolving points against a polygon.
struct ParsedBinomial {
    LatticePoint plus_a, plus_b;
    LatticePoint minus_a, minus_b;
};

// Parses a list of binomials separated by newlines or top-level commas.
// Factors are z_{(i,j)}, optionally joined by '*'; squares may be written
// either z_{(i,j)}^2 (or ^{2}) or as a repeated factor.
std::vector<ParsedBinomial> parse_binomials(std::string_view text);

// Resolves parsed binomials against a basis; throws UnknownPoint when a
// coordinate references a point outside P.
std::vector<BinomialGenerator> resolve_binomials(const MonomialBasis& basis,
                                                 const std::vector<ParsedBinomial>& parsed);

}  // namespace toricgen
