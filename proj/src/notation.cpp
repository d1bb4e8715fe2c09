#include "toricgen/notation.hpp"

#include <cctype>

namespace toricgen {

namespace {

std::string point_text(const LatticePoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string factor_text(const LatticePoint& p) { return "z_{" + point_text(p) + "}"; }

// --- parsing ----------------------------------------------------------

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_space() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }

    bool accept(char c) {
        skip_space();
        if (!done() && peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* where) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' in " + where + " at offset " +
                             std::to_string(pos));
    }

    Int integer() {
        skip_space();
        const std::size_t start = pos;
        if (!done() && (peek() == '-' || peek() == '+')) ++pos;
        std::size_t digits = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected an integer at offset " + std::to_string(start));
        return std::stoll(std::string(text.substr(start, pos - start)));
    }
};

LatticePoint parse_factor(Cursor& c) {
    c.skip_space();
    if (c.done() || c.peek() != 'z') throw ParseError("expected 'z' at offset " + std::to_string(c.pos));
    ++c.pos;
    c.expect('_', "z subscript");
    c.expect('{', "z subscript");
    c.expect('(', "point");
    const Int x = c.integer();
    c.expect(',', "point");
    const Int y = c.integer();
    c.expect(')', "point");
    c.expect('}', "z subscript");
    return {x, y};
}

// factor [* ] factor | factor ^2 | factor ^{2}
std::pair<LatticePoint, LatticePoint> parse_term(Cursor& c) {
    const LatticePoint a = parse_factor(c);
    if (c.accept('^')) {
        bool braced = c.accept('{');
        c.skip_space();
        if (c.done() || c.peek() != '2')
            throw ParseError("only squares are valid in a quadratic term (offset " +
                             std::to_string(c.pos) + ")");
        ++c.pos;
        if (braced) c.expect('}', "exponent");
        return {a, a};
    }
    c.accept('*');
    const LatticePoint b = parse_factor(c);
    return {a, b};
}

ParsedBinomial parse_one(std::string_view chunk) {
    Cursor c{chunk};
    ParsedBinomial out;
    auto plus = parse_term(c);
    c.skip_space();
    if (!c.accept('-'))
        throw ParseError("expected '-' between the two monomials at offset " +
                         std::to_string(c.pos));
    auto minus = parse_term(c);
    c.skip_space();
    if (!c.done()) throw ParseError("trailing input after binomial at offset " + std::to_string(c.pos));
    out.plus_a = plus.first;
    out.plus_b = plus.second;
    out.minus_a = minus.first;
    out.minus_b = minus.second;
    return out;
}

}  // namespace

std::string monomial_text(const std::vector<LatticePoint>& points, const PairMonomial& m,
                          bool collapse_squares) {
    const auto& a = points.at(static_cast<std::size_t>(m.first));
    const auto& b = points.at(static_cast<std::size_t>(m.second));
    if (collapse_squares && m.first == m.second) return factor_text(a) + "^2";
    return factor_text(a) + factor_text(b);
}

std::string binomial_text(const std::vector<LatticePoint>& points, const BinomialGenerator& g,
                          bool collapse_squares) {
    return monomial_text(points, g.plus, collapse_squares) + "-" +
           monomial_text(points, g.minus, collapse_squares);
}

std::vector<ParsedBinomial> parse_binomials(std::string_view text) {
    // split on newlines and on commas that sit outside braces/parentheses
    std::vector<ParsedBinomial> out;
    std::string chunk;
    int depth = 0;
    auto flush = [&]() {
        std::size_t a = chunk.find_first_not_of(" \t\r");
        if (a == std::string::npos) {
            chunk.clear();
            return;
        }
        std::size_t b = chunk.find_last_not_of(" \t\r");
        out.push_back(parse_one(std::string_view(chunk).substr(a, b - a + 1)));
        chunk.clear();
    };
    for (char ch : text) {
        if (ch == '{' || ch == '(') ++depth;
        if (ch == '}' || ch == ')') --depth;
        if (ch == '\n' || (ch == ',' && depth == 0)) {
            flush();
            continue;
        }
        chunk.push_back(ch);
    }
    flush();
    return out;
}

std::vector<BinomialGenerator> resolve_binomials(const MonomialBasis& basis,
                                                 const std::vector<ParsedBinomial>& parsed) {
    const auto resolve_point = [&](const LatticePoint& p) {
        const std::int32_t idx = basis.point_index(p);
        if (idx < 0)
            throw UnknownPoint("point " + point_text(p) + " is not a lattice point of the polygon");
        return idx;
    };
    const auto resolve_term = [&](const LatticePoint& a, const LatticePoint& b) {
        std::int32_t i = resolve_point(a);
        std::int32_t j = resolve_point(b);
        if (i > j) std::swap(i, j);
        return basis.monomials()[basis.monomial_index(i, j)];
    };

    std::vector<BinomialGenerator> gens;
    gens.reserve(parsed.size());
    for (const auto& pb : parsed)
        gens.push_back(BinomialGenerator{resolve_term(pb.plus_a, pb.plus_b),
                                         resolve_term(pb.minus_a, pb.minus_b)});
    return gens;
}

}  // namespace toricgen
