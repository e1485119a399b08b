#pragma once

// Expression trees for summands f(k), g(k), kernel exponents, bounds and
// closed forms. Nodes are immutable and shared.

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "combid/rational.hpp"

namespace combid {

struct Node;
using Expr = std::shared_ptr<const Node>;

enum class Fn {
  Binom,      // binom(upper, lower), lower integer-valued
  Fact,       // fact(n)
  Stirling,   // stirling(m, k) = S(m,k)
  RStirling,  // rstirling(m, k, v) = S_v(m+v, k+v)
  DSum,       // dsum(u, v, m) = sum_p (-1)^p binom(u,p) (v+p)^m
  Floor,
  Min,
  Max,
  Even,       // 1 if the argument is an even integer, else 0
};

struct FnInfo {
  Fn fn;
  std::string_view name;
  std::size_t arity;
};

inline constexpr FnInfo kFunctions[] = {
    {Fn::Binom, "binom", 2},     {Fn::Fact, "fact", 1}, {Fn::Stirling, "stirling", 2},
    {Fn::RStirling, "rstirling", 3}, {Fn::DSum, "dsum", 3}, {Fn::Floor, "floor", 1},
    {Fn::Min, "min", 2},         {Fn::Max, "max", 2},   {Fn::Even, "even", 1},
};

inline const FnInfo& fn_info(Fn fn) {
  for (const auto& info : kFunctions)
    if (info.fn == fn) return info;
  return kFunctions[0];
}

struct Num {
  Rational value;
};
struct Var {
  std::string name;
};
struct Neg {
  Expr arg;
};
struct Add {
  std::vector<Expr> args;
};
struct Mul {
  std::vector<Expr> args;
};
struct Div {
  Expr num, den;
};
struct Pow {
  Expr base, exponent;
};
struct Call {
  Fn fn;
  std::vector<Expr> args;
};

struct Node {
  std::variant<Num, Var, Neg, Add, Mul, Div, Pow, Call> v;
};

template <class T>
const T* as(const Expr& e) {
  return std::get_if<T>(&e->v);
}

namespace ex {

inline Expr make(auto node) { return std::make_shared<const Node>(Node{std::move(node)}); }

inline Expr num(const Rational& q) { return make(Num{q}); }
inline Expr num(long long z) { return make(Num{Rational(z)}); }
inline Expr var(std::string name) { return make(Var{std::move(name)}); }
inline Expr neg(Expr a) { return make(Neg{std::move(a)}); }
inline Expr add(std::vector<Expr> args) { return make(Add{std::move(args)}); }
inline Expr mul(std::vector<Expr> args) { return make(Mul{std::move(args)}); }
inline Expr div(Expr a, Expr b) { return make(Div{std::move(a), std::move(b)}); }
inline Expr pow(Expr a, Expr b) { return make(Pow{std::move(a), std::move(b)}); }
inline Expr call(Fn fn, std::vector<Expr> args) { return make(Call{fn, std::move(args)}); }
inline Expr binom(Expr a, Expr b) { return call(Fn::Binom, {std::move(a), std::move(b)}); }
inline Expr inv_binom(Expr a, Expr b) { return pow(binom(std::move(a), std::move(b)), num(-1)); }

inline bool is_num(const Expr& e, const Rational& q) {
  auto n = as<Num>(e);
  return n && n->value == q;
}

// Light-weight simplifying constructors used when transforms build new terms.
inline Expr plus(const Expr& a, const Expr& b) {
  auto na = as<Num>(a), nb = as<Num>(b);
  if (na && nb) return num(na->value + nb->value);
  if (na && na->value == 0) return b;
  if (nb && nb->value == 0) return a;
  if (auto sa = as<Add>(a)) {
    auto args = sa->args;
    args.push_back(b);
    return add(std::move(args));
  }
  return add({a, b});
}

inline Expr minus(const Expr& a, const Expr& b) {
  auto na = as<Num>(a), nb = as<Num>(b);
  if (na && nb) return num(na->value - nb->value);
  if (nb && nb->value == 0) return a;
  if (auto sa = as<Add>(a)) {
    auto args = sa->args;
    args.push_back(neg(b));
    return add(std::move(args));
  }
  return add({a, neg(b)});
}

inline Expr times(const Expr& a, const Expr& b) {
  auto na = as<Num>(a), nb = as<Num>(b);
  if (na && nb) return num(na->value * nb->value);
  if (na && na->value == 1) return b;
  if (nb && nb->value == 1) return a;
  std::vector<Expr> args;
  if (auto ma = as<Mul>(a))
    args = ma->args;
  else
    args.push_back(a);
  if (auto mb = as<Mul>(b))
    args.insert(args.end(), mb->args.begin(), mb->args.end());
  else
    args.push_back(b);
  return mul(std::move(args));
}

inline Expr product(std::initializer_list<Expr> items) {
  Expr acc = num(1);
  for (const auto& e : items) acc = times(acc, e);
  return acc;
}

}  // namespace ex

bool equal(const Expr& a, const Expr& b);

namespace detail {
inline bool equal_all(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}
}  // namespace detail

inline bool equal(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (!a || !b || a->v.index() != b->v.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b->v);
        if constexpr (std::is_same_v<T, Num>) return x.value == y.value;
        else if constexpr (std::is_same_v<T, Var>) return x.name == y.name;
        else if constexpr (std::is_same_v<T, Neg>) return equal(x.arg, y.arg);
        else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Mul>) return detail::equal_all(x.args, y.args);
        else if constexpr (std::is_same_v<T, Div>) return equal(x.num, y.num) && equal(x.den, y.den);
        else if constexpr (std::is_same_v<T, Pow>) return equal(x.base, y.base) && equal(x.exponent, y.exponent);
        else return x.fn == y.fn && detail::equal_all(x.args, y.args);
      },
      a->v);
}

// Replace every occurrence of variable `name` by `value`.
inline Expr substitute(const Expr& e, const std::string& name, const Expr& value) {
  auto sub_all = [&](const std::vector<Expr>& args) {
    std::vector<Expr> out;
    out.reserve(args.size());
    for (const auto& a : args) out.push_back(substitute(a, name, value));
    return out;
  };
  return std::visit(
      [&](const auto& x) -> Expr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Num>) return e;
        else if constexpr (std::is_same_v<T, Var>) return x.name == name ? value : e;
        else if constexpr (std::is_same_v<T, Neg>) return ex::neg(substitute(x.arg, name, value));
        else if constexpr (std::is_same_v<T, Add>) return ex::add(sub_all(x.args));
        else if constexpr (std::is_same_v<T, Mul>) return ex::mul(sub_all(x.args));
        else if constexpr (std::is_same_v<T, Div>)
          return ex::div(substitute(x.num, name, value), substitute(x.den, name, value));
        else if constexpr (std::is_same_v<T, Pow>)
          return ex::pow(substitute(x.base, name, value), substitute(x.exponent, name, value));
        else return ex::call(x.fn, sub_all(x.args));
      },
      e->v);
}

inline void collect_vars(const Expr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) out.insert(x.name);
        else if constexpr (std::is_same_v<T, Neg>) collect_vars(x.arg, out);
        else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Mul> || std::is_same_v<T, Call>)
          for (const auto& a : x.args) collect_vars(a, out);
        else if constexpr (std::is_same_v<T, Div>) {
          collect_vars(x.num, out);
          collect_vars(x.den, out);
        } else if constexpr (std::is_same_v<T, Pow>) {
          collect_vars(x.base, out);
          collect_vars(x.exponent, out);
        }
      },
      e->v);
}

inline bool mentions(const Expr& e, const std::string& name) {
  std::set<std::string> vars;
  collect_vars(e, vars);
  return vars.count(name) > 0;
}

}  // namespace combid
