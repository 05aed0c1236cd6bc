#ifndef RBL_RATIONAL_HPP
#define RBL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace rbl {

// Ground field: exact rationals with arbitrary-precision integer parts.
// cpp_rational keeps the invariants we rely on everywhere (denominator > 0,
// fully reduced, canonical 0/1).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Mathematical verdict failure (bad cocycle, invalid operator, ...).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input document or out-of-contract shape.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p" or "p/q" with q > 0. Anything else (floats included) throws.
Rational parse_rational(const std::string& text);

/// Renders as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace rbl

#endif
