#pragma once

// Arbitrary-precision integers and rationals. Values are always kept in
// lowest terms with a positive denominator by the backend.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "combid/errors.hpp"

namespace combid {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline bool is_even_integer(const Rational& q) {
  return is_integer(q) && (numerator(q) & 1) == 0;
}

// Converts an integral rational to a machine integer; throws DomainError when
// the value is not integral or does not fit.
inline std::int64_t to_int64(const Rational& q, std::string_view what = "value") {
  if (!is_integer(q)) {
    throw DomainError(std::string(what) + " must be an integer, got " +
                      numerator(q).str() + "/" + denominator(q).str());
  }
  const Integer& z = numerator(q);
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError(std::string(what) + " is too large");
  }
  return static_cast<std::int64_t>(z);
}

// "p/q" in lowest terms, "/q" omitted when q = 1.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "p", "-p" or "p/q" (q nonzero). Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_int(num)) return std::nullopt;
  Integer p(std::string(num.front() == '+' ? num.substr(1) : num));
  if (slash == std::string_view::npos) return Rational(p);
  std::string_view den = text.substr(slash + 1);
  if (!is_int(den)) return std::nullopt;
  Integer q(std::string(den.front() == '+' ? den.substr(1) : den));
  if (q == 0) return std::nullopt;
  return Rational(p, q);
}

// Exact integer power with a (possibly negative) machine exponent.
inline Rational pow(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw PoleError("zero raised to a negative power");
    return pow(Rational(1) / base, -e);
  }
  Rational result = 1;
  Rational b = base;
  auto n = static_cast<std::uint64_t>(e);
  while (n) {
    if (n & 1) result *= b;
    b *= b;
    n >>= 1;
  }
  return result;
}

inline Rational floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return Rational(f);
}

}  // namespace combid
