#pragma once

// Factorials, binomial coefficients, Stirling and r-Stirling numbers of the
// second kind, all in exact arithmetic.

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "combid/errors.hpp"
#include "combid/rational.hpp"

namespace combid {

inline Integer factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  Integer f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Number of j-subsets of an i-set; 0 when j < 0 or j > i.
inline Integer binom_int(std::int64_t i, std::int64_t j) {
  if (i < 0) throw DomainError("binom_int: negative upper index " + std::to_string(i));
  if (j < 0 || j > i) return 0;
  if (j > i - j) j = i - j;
  Integer c = 1;
  for (std::int64_t t = 1; t <= j; ++t) {
    c *= i - j + t;
    c /= t;
  }
  return c;
}

// Falling-factorial form a(a-1)...(a-j+1)/j! for rational a and integer j >= 0.
inline Rational binom_rational(const Rational& a, std::int64_t j) {
  if (j < 0) throw DomainError("binom_rational: negative lower index " + std::to_string(j));
  Rational num = 1;
  for (std::int64_t t = 0; t < j; ++t) {
    num *= a - t;
    if (num == 0) return 0;
  }
  return num / Rational(factorial(j));
}

inline Rational inv_binom(const Rational& a, std::int64_t j) {
  Rational c = binom_rational(a, j);
  if (c == 0) {
    throw PoleError("binom(" + to_string(a) + "," + std::to_string(j) + ") vanishes under ^-1");
  }
  return Rational(1) / c;
}

// sum_{p=0}^{u} (-1)^p binom(u,p) (v+p)^m, the m-th derivative at 0 of
// (1-e^x)^u e^{vx}.
inline Integer alternating_power_sum(std::int64_t u, std::int64_t v, std::int64_t m) {
  if (u < 0 || m < 0) throw DomainError("alternating_power_sum: negative u or m");
  Integer total = 0;
  for (std::int64_t p = 0; p <= u; ++p) {
    Integer term = binom_int(u, p) * boost::multiprecision::pow(Integer(v + p), static_cast<unsigned>(m));
    if (p & 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

// Memo of S(m,k) and S_v(m+v, k+v), keyed by (m, k, v). Thread-safe.
class StirlingTable {
 public:
  // Partitions of an m-set into k nonempty blocks.
  Integer stirling2(std::int64_t m, std::int64_t k) { return r_stirling2(m, k, 0); }

  // r-Stirling number S_v(m+v, k+v): partitions of an (m+v)-set into k+v
  // blocks with v distinguished elements in distinct blocks.
  Integer r_stirling2(std::int64_t m, std::int64_t k, std::int64_t v) {
    if (m < 0 || k < 0 || v < 0) throw DomainError("stirling numbers need non-negative arguments");
    if (k > m) return 0;
    const Key key{m, k, v};
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Integer value = alternating_power_sum(k, v, m) / Integer(factorial(k));
    if (k & 1) value = -value;
    std::unique_lock lock(mutex_);
    memo_.emplace(key, value);
    return value;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

 private:
  using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  mutable std::shared_mutex mutex_;
  std::map<Key, Integer> memo_;
};

inline StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

inline Integer stirling2(std::int64_t m, std::int64_t k) { return stirling_table().stirling2(m, k); }

inline Integer r_stirling2(std::int64_t m, std::int64_t k, std::int64_t v) {
  return stirling_table().r_stirling2(m, k, v);
}

}  // namespace combid
