#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace asmpoly {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or a decimal literal such as ".4", "-1.25" exactly.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise. Never emits decimals.
std::string to_string(const Rational &value);

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and comparisons on unreduced values are wrong.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_inner(const Rational &value) { return value > 0 && value < 1; }

} // namespace asmpoly
