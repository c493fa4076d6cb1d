#include "semiq/rational.hpp"

#include <cctype>

namespace semiq {

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view() : text.substr(slash + 1);
  if (!valid_integer_token(num) || (slash != std::string_view::npos && !valid_integer_token(den))) {
    throw input_error("bad_rational", "not a rational literal: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  if (slash == std::string_view::npos) return Rational(n);
  Integer d{std::string(den)};
  if (d == 0) {
    throw input_error("zero_denominator", "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::size_t rational_bits(const Rational& value) {
  if (value == 0) return 1;
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  std::size_t nb = mpz_sizeinbase(num.backend().data(), 2);
  std::size_t db = mpz_sizeinbase(den.backend().data(), 2);
  return nb > db ? nb : db;
}

}  // namespace semiq
