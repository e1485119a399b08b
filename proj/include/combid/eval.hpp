#pragma once

// Exact evaluation of expression trees, numerically (Rational) or
// symbolically (RationalFunction in chosen indeterminates).
//
// Products are evaluated left to right and stop at the first zero factor, so
// a vanishing binomial written before an inverse binomial makes the whole
// summand zero instead of raising a pole. Quotients always evaluate their
// divisor; a zero divisor is a PoleError.

#include <map>
#include <optional>
#include <set>
#include <string>

#include "combid/errors.hpp"
#include "combid/exact_arith.hpp"
#include "combid/expr.hpp"
#include "combid/polynomial.hpp"

namespace combid {

using ParamBinding = std::map<std::string, Rational>;

// Parameter values plus the current summation index.
struct Env {
  const ParamBinding& params;
  std::optional<Rational> k{};

  const Rational& lookup(const std::string& name) const {
    if (name == "k") {
      if (!k) throw UnboundParameter("k");
      return *k;
    }
    auto it = params.find(name);
    if (it == params.end()) throw UnboundParameter(name);
    return it->second;
  }
};

Rational eval(const Expr& e, const Env& env);

namespace detail {

inline std::int64_t eval_int(const Expr& e, const Env& env, std::string_view what) {
  return to_int64(eval(e, env), what);
}

inline Rational binom_value(const Rational& upper, const Rational& lower) {
  if (!is_integer(lower)) {
    throw DomainError("binomial lower index " + to_string(lower) + " is not an integer");
  }
  auto j = to_int64(lower, "binomial lower index");
  if (j < 0) return 0;
  return binom_rational(upper, j);
}

inline Rational dsum_value(std::int64_t u, const Rational& v, std::int64_t m) {
  if (u < 0 || m < 0) throw DomainError("dsum needs non-negative u and m");
  Rational total = 0;
  for (std::int64_t p = 0; p <= u; ++p) {
    Rational term = Rational(binom_int(u, p)) * combid::pow(v + p, m);
    total += (p & 1) ? Rational(-term) : term;
  }
  return total;
}

inline Rational call_value(const Call& c, const Env& env) {
  switch (c.fn) {
    case Fn::Binom:
      return binom_value(eval(c.args[0], env), eval(c.args[1], env));
    case Fn::Fact: {
      auto n = eval_int(c.args[0], env, "factorial argument");
      if (n < 0) throw DomainError("factorial of a negative integer");
      return Rational(factorial(n));
    }
    case Fn::Stirling: {
      auto m = eval_int(c.args[0], env, "stirling m"), k = eval_int(c.args[1], env, "stirling k");
      if (m < 0 || k < 0) throw DomainError("stirling of negative arguments");
      return Rational(stirling2(m, k));
    }
    case Fn::RStirling: {
      auto m = eval_int(c.args[0], env, "rstirling m"), k = eval_int(c.args[1], env, "rstirling k"),
           v = eval_int(c.args[2], env, "rstirling v");
      if (m < 0 || k < 0 || v < 0) throw DomainError("rstirling of negative arguments");
      return Rational(r_stirling2(m, k, v));
    }
    case Fn::DSum:
      return dsum_value(eval_int(c.args[0], env, "dsum u"), eval(c.args[1], env),
                        eval_int(c.args[2], env, "dsum m"));
    case Fn::Floor:
      return combid::floor(eval(c.args[0], env));
    case Fn::Min: {
      auto a = eval(c.args[0], env), b = eval(c.args[1], env);
      return a < b ? a : b;
    }
    case Fn::Max: {
      auto a = eval(c.args[0], env), b = eval(c.args[1], env);
      return a < b ? b : a;
    }
    case Fn::Even:
      return is_even_integer(eval(c.args[0], env)) ? 1 : 0;
  }
  throw DomainError("unknown function");
}

}  // namespace detail

inline Rational eval(const Expr& e, const Env& env) {
  return std::visit(
      [&](const auto& x) -> Rational {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Num>) return x.value;
        else if constexpr (std::is_same_v<T, Var>) return env.lookup(x.name);
        else if constexpr (std::is_same_v<T, Neg>) return -eval(x.arg, env);
        else if constexpr (std::is_same_v<T, Add>) {
          Rational s = 0;
          for (const auto& a : x.args) s += eval(a, env);
          return s;
        } else if constexpr (std::is_same_v<T, Mul>) {
          Rational p = 1;
          for (const auto& a : x.args) {
            p *= eval(a, env);
            if (p == 0) return 0;
          }
          return p;
        } else if constexpr (std::is_same_v<T, Div>) {
          Rational n = eval(x.num, env);
          Rational d = eval(x.den, env);
          if (d == 0) throw PoleError("division by zero");
          return n / d;
        } else if constexpr (std::is_same_v<T, Pow>) {
          Rational b = eval(x.base, env);
          auto p = to_int64(eval(x.exponent, env), "exponent");
          return combid::pow(b, p);
        } else {
          return detail::call_value(x, env);
        }
      },
      e->v);
}

// Value of a summand at index k under a binding.
inline Rational eval_term(const Expr& e, const Rational& k, const ParamBinding& b) {
  return eval(e, Env{b, k});
}

// Symbolic evaluation: variables listed in `symbols` stay indeterminate,
// everything else must be bound. Integer-valued positions (binomial lower
// indices, exponents, Stirling arguments) must not depend on a symbol.
inline RationalFunction eval_rf(const Expr& e, const Env& env, const std::set<std::string>& symbols) {
  return std::visit(
      [&](const auto& x) -> RationalFunction {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Num>) return x.value;
        else if constexpr (std::is_same_v<T, Var>) {
          if (symbols.count(x.name)) return Polynomial::var(x.name);
          return env.lookup(x.name);
        } else if constexpr (std::is_same_v<T, Neg>) return -eval_rf(x.arg, env, symbols);
        else if constexpr (std::is_same_v<T, Add>) {
          RationalFunction s;
          for (const auto& a : x.args) s = s + eval_rf(a, env, symbols);
          return s;
        } else if constexpr (std::is_same_v<T, Mul>) {
          RationalFunction p = Rational(1);
          for (const auto& a : x.args) {
            p = p * eval_rf(a, env, symbols);
            if (p.is_zero()) return p;
          }
          return p;
        } else if constexpr (std::is_same_v<T, Div>) {
          RationalFunction n = eval_rf(x.num, env, symbols);
          return n / eval_rf(x.den, env, symbols);
        } else if constexpr (std::is_same_v<T, Pow>) {
          auto p = to_int64(eval(x.exponent, env), "exponent");
          RationalFunction b = eval_rf(x.base, env, symbols);
          RationalFunction r = Rational(1);
          for (std::int64_t i = 0; i < (p < 0 ? -p : p); ++i) r = r * b;
          if (p < 0) return RationalFunction(Rational(1)) / r;
          return r;
        } else {
          if (x.fn == Fn::Binom) {
            Rational lower = eval(x.args[1], env);
            if (!is_integer(lower)) throw DomainError("binomial lower index is not an integer");
            auto j = to_int64(lower, "binomial lower index");
            if (j < 0) return Rational(0);
            RationalFunction upper = eval_rf(x.args[0], env, symbols);
            RationalFunction r = Rational(1);
            for (std::int64_t t = 0; t < j; ++t) r = r * (upper - RationalFunction(Rational(t)));
            return r * RationalFunction(Rational(1) / Rational(factorial(j)));
          }
          return detail::call_value(x, env);
        }
      },
      e->v);
}

}  // namespace combid
