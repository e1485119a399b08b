#pragma once

// Sparse multivariate polynomials over Rational in named indeterminates, and
// rational functions built from them.
//
// Terms are kept in graded lexicographic order on exponent vectors, with
// variables compared alphabetically, so structural equality is mathematical
// equality.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combid/errors.hpp"
#include "combid/rational.hpp"

namespace combid {

class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;

  // Exponent-zero factors are dropped; repeated names are merged.
  Monomial(std::initializer_list<Factor> factors) {
    for (const auto& [name, e] : factors) mul_var(name, e);
  }

  static Monomial var(const std::string& name, std::uint32_t e = 1) {
    Monomial m;
    m.mul_var(name, e);
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  std::uint32_t degree(const std::string& name) const {
    for (const auto& [n, e] : factors_)
      if (n == name) return e;
    return 0;
  }

  Monomial without(const std::string& name) const {
    Monomial m;
    for (const auto& f : factors_)
      if (f.first != name) m.factors_.push_back(f);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (const auto& [name, e] : b.factors_) m.mul_var(name, e);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    std::string s;
    for (const auto& [name, e] : factors_) {
      if (!s.empty()) s += "*";
      s += name;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

 private:
  void mul_var(const std::string& name, std::uint32_t e) {
    if (e == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), name,
                               [](const Factor& f, const std::string& n) { return f.first < n; });
    if (it != factors_.end() && it->first == name)
      it->second += e;
    else
      factors_.insert(it, {name, e});
  }

  std::vector<Factor> factors_;  // sorted by name, exponents > 0
};

// Graded lexicographic: lower total degree first, then lexicographic on the
// exponent vector with variables taken in alphabetical order.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
      if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) return false;  // a has an earlier var
      if (i == fa.size() || fb[j].first < fa[i].first) return true;
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
      ++i;
      ++j;
    }
    return false;
  }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial var(const std::string& name) { return monomial(Monomial::var(name), 1); }

  static Polynomial monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Greatest term under the canonical order. Requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return *terms_.rbegin();
  }

  std::int64_t degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, m.degree());
    return d;
  }

  std::int64_t degree(const std::string& name) const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, m.degree(name));
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial{} - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // Replace an indeterminate by a polynomial; an evaluation homomorphism.
  Polynomial substitute(const std::string& name, const Polynomial& value) const {
    Polynomial r;
    std::map<std::uint32_t, Polynomial> powers;
    for (const auto& [m, c] : terms_) {
      const auto e = m.degree(name);
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, pow(value, e)).first;
      r += (Polynomial::monomial(m.without(name), c)) * it->second;
    }
    return r;
  }

  // Evaluate with every indeterminate bound; throws UnboundParameter otherwise.
  Rational evaluate(const std::map<std::string, Rational>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (const auto& [name, e] : m.factors()) {
        auto it = values.find(name);
        if (it == values.end()) throw UnboundParameter(name);
        t *= combid::pow(it->second, e);
      }
      total += t;
    }
    return total;
  }

  friend Polynomial pow(const Polynomial& base, std::uint64_t e) {
    Polynomial result = 1;
    Polynomial b = base;
    while (e) {
      if (e & 1) result *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return result;
  }

  // Highest-degree terms first, e.g. "x^2 - 2*x + 1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (m.is_one()) {
        s += to_string(mag);
      } else {
        if (mag != 1) s += to_string(mag) + "*";
        s += m.str();
      }
    }
    return s;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

// num/den with den != 0. Normalized so that the leading coefficient of the
// denominator is 1 and a zero numerator has denominator 1. No gcd is taken;
// equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw PoleError("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  // Formal equality: a.num * b.den == b.num * a.den.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const {
    if (den_ == Polynomial(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw PoleError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    const Rational lc = den_.leading().second;
    if (lc != 1) {
      num_ = num_.scaled(Rational(1) / lc);
      den_ = den_.scaled(Rational(1) / lc);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline bool rf_equal(const RationalFunction& a, const RationalFunction& b) { return a == b; }

}  // namespace combid
