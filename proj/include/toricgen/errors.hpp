#pragma once

#include <stdexcept>
#include <string>

namespace toricgen {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// exit codes: input-shaped failures exit 2, a failed Koelman gate exits 3,
// a report whose verification failed exits 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex input whose convex hull is a point or a segment.
struct DegenerateInput : Error {
    using Error::Error;
};

// Checked 64-bit arithmetic overflowed; inputs are too large for this build.
struct OverflowError : Error {
    using Error::Error;
};

// LDP validation: the origin is not strictly inside the polygon.
struct OriginNotInterior : Error {
    using Error::Error;
};

// LDP validation: some vertex (x,y) has gcd(|x|,|y|) > 1.
struct NonPrimitiveVertex : Error {
    using Error::Error;
};

// Polygon has fewer than 4 boundary lattice points, so quadratic generation
// of the full ideal is not guaranteed.
struct GateFailed : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// A binomial references a lattice point outside P.
struct UnknownPoint : Error {
    using Error::Error;
};

}  // namespace toricgen
