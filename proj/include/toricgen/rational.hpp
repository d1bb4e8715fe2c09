#pragma once

#include <compare>
#include <string>

#include "toricgen/int_math.hpp"

namespace toricgen {

// Exact rational on checked 64-bit integers, always reduced with den > 0.
struct Rational {
    Int num{0};
    Int den{1};

    Rational() = default;
    Rational(Int n) : num(n) {}
    Rational(Int n, Int d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) {
            n = checked_neg(n);
            d = checked_neg(d);
        }
        const Int g = gcd_int(n, d);
        num = (g == 0) ? 0 : n / g;
        den = (g == 0) ? 1 : d / g;
    }

    bool is_integer() const { return den == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                        checked_mul(den, o.den));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
                        checked_mul(den, o.den));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::invalid_argument("rational division by zero");
        return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
    }
    Rational operator-() const { return Rational(checked_neg(num), den); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) <=> checked_mul(b.num, a.den);
    }

    std::string str() const {
        return is_integer() ? std::to_string(num)
                            : std::to_string(num) + "/" + std::to_string(den);
    }
};

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    friend std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    RationalPoint operator-(const RationalPoint& o) const { return {x - o.x, y - o.y}; }
};

inline Rational cross(const RationalPoint& a, const RationalPoint& b) {
    return a.x * b.y - a.y * b.x;
}

inline Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return cross(a - o, b - o);
}

inline Rational dot(const RationalPoint& a, const RationalPoint& b) {
    return a.x * b.x + a.y * b.y;
}

}  // namespace toricgen
