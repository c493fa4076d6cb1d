#ifndef SEMIQ_RATIONAL_HPP
#define SEMIQ_RATIONAL_HPP

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <string>
#include <string_view>

#include "semiq/errors.hpp"

namespace semiq {

// Exact arithmetic scalars. mpq keeps values in canonical lowest terms with a
// positive denominator, so structural equality is mathematical equality and
// values can be hashed directly.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p", "-p", "p/q". Rejects a zero denominator and malformed input.
Rational parse_rational(std::string_view text);

// "p/q" when q != 1, otherwise "p".
std::string rational_to_string(const Rational& value);

// Bit length of the larger of |numerator| and denominator; 1 for zero.
std::size_t rational_bits(const Rational& value);

inline std::size_t rational_hash(const Rational& value) {
  return boost::hash<Rational>{}(value);
}

inline Integer integer_pow(Integer base, unsigned long exponent) {
  Integer out = 1;
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    base *= base;
    exponent >>= 1;
  }
  return out;
}

}  // namespace semiq

#endif  // SEMIQ_RATIONAL_HPP
