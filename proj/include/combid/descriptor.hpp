#pragma once

// Two-sided summation identities
//
//   sum_{k=l1}^{l2} f(k) x^{a(k)} (1-x)^{b(k)} + ...  ==  sum_{k=n1}^{n2} g(k) x^{c(k)} (1-x)^{d(k)} + ...
//
// Each side is a list of sums; the common shape sum f(k) x^{p(k)} = sum g(k)
// (1-x)^{q(k)} is the case a = p, b = 0 on the left and c = 0, d = q on the
// right. Purely numeric identities use x^0 (1-x)^0 throughout.
//
// When `negate_x` is set the stored sums describe the identity in -x: the
// displayed left side is L(x) = S_L(-x). This is how identities written with
// (1+x) kernels are kept in the (1-x) normal form.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "combid/errors.hpp"
#include "combid/eval.hpp"
#include "combid/expr.hpp"
#include "combid/polynomial.hpp"

namespace combid {

inline const std::string kX = "x";

enum class ParamKind { Nat, Int, Rat };

inline std::string_view kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::Nat: return "nat";
    case ParamKind::Int: return "int";
    case ParamKind::Rat: return "rat";
  }
  return "rat";
}

struct ParamDecl {
  std::string name;
  ParamKind kind = ParamKind::Rat;
  friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

struct SumTerm {
  Expr lo, hi;
  Expr coeff;
  Expr x_exp = ex::num(0);    // exponent of x
  Expr omx_exp = ex::num(0);  // exponent of (1-x)
};

inline bool equal(const SumTerm& a, const SumTerm& b) {
  return equal(a.lo, b.lo) && equal(a.hi, b.hi) && equal(a.coeff, b.coeff) && equal(a.x_exp, b.x_exp) &&
         equal(a.omx_exp, b.omx_exp);
}

using Side = std::vector<SumTerm>;

enum class RelOp { Lt, Le, Gt, Ge, Eq, Ne };

inline std::string_view rel_name(RelOp op) {
  switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return ">=";
    case RelOp::Eq: return "==";
    case RelOp::Ne: return "!=";
  }
  return "==";
}

inline bool holds(const Rational& a, RelOp op, const Rational& b) {
  switch (op) {
    case RelOp::Lt: return a < b;
    case RelOp::Le: return a <= b;
    case RelOp::Gt: return a > b;
    case RelOp::Ge: return a >= b;
    case RelOp::Eq: return a == b;
    case RelOp::Ne: return a != b;
  }
  return false;
}

// A checkable replacement for an analytic hypothesis. `enforced` constraints
// gate evaluation (violations are skipped, never failed); the others only
// mark whether a binding lies inside the region the identity was stated for.
struct Constraint {
  enum class Kind {
    NotNonPositiveInteger,  // arg0 is not in {0, -1, -2, ...}
    NotNegativeInteger,     // arg0 is not in {-1, -2, ...}
    IntegerValued,          // arg0 is an integer
    NonzeroBinomial,        // binom(arg0, arg1) != 0
    Relation,               // arg0 op arg1
    ForAllK,                // for k in arg0..arg1: arg2 op arg3
  };
  Kind kind;
  std::vector<Expr> args;
  RelOp op = RelOp::Gt;
  bool enforced = true;
};

inline bool equal(const Constraint& a, const Constraint& b) {
  return a.kind == b.kind && a.op == b.op && a.enforced == b.enforced && detail::equal_all(a.args, b.args);
}

struct IdentityDescriptor {
  std::vector<ParamDecl> params;
  bool negate_x = false;
  Side lhs, rhs;
  std::vector<Constraint> constraints;

  const ParamDecl* param(const std::string& name) const {
    for (const auto& p : params)
      if (p.name == name) return &p;
    return nullptr;
  }
};

inline bool equal(const IdentityDescriptor& a, const IdentityDescriptor& b) {
  auto same_side = [](const Side& x, const Side& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!equal(x[i], y[i])) return false;
    return true;
  };
  if (a.params != b.params || a.negate_x != b.negate_x || !same_side(a.lhs, b.lhs) || !same_side(a.rhs, b.rhs))
    return false;
  if (a.constraints.size() != b.constraints.size()) return false;
  for (std::size_t i = 0; i < a.constraints.size(); ++i)
    if (!equal(a.constraints[i], b.constraints[i])) return false;
  return true;
}

enum class SideId { Left, Right };

inline const Side& side_of(const IdentityDescriptor& d, SideId s) { return s == SideId::Left ? d.lhs : d.rhs; }

// Raises DomainError when a parameter value does not match its declared kind.
inline void check_binding_kinds(const IdentityDescriptor& d, const ParamBinding& b) {
  for (const auto& p : d.params) {
    auto it = b.find(p.name);
    if (it == b.end()) throw UnboundParameter(p.name);
    if (p.kind == ParamKind::Rat) continue;
    if (!is_integer(it->second)) throw DomainError("parameter " + p.name + " must be an integer");
    if (p.kind == ParamKind::Nat && it->second < 0)
      throw DomainError("parameter " + p.name + " must be a non-negative integer");
  }
}

namespace detail {

struct KRange {
  std::int64_t lo, hi;
};

inline KRange eval_range(const SumTerm& t, const ParamBinding& b) {
  Env env{b};
  return {to_int64(eval(t.lo, env), "lower summation bound"), to_int64(eval(t.hi, env), "upper summation bound")};
}

inline std::int64_t eval_exponent(const Expr& e, const Env& env) {
  auto v = to_int64(eval(e, env), "kernel exponent");
  if (v < 0) throw DomainError("negative kernel exponent " + std::to_string(v));
  return v;
}

// Visits every nonzero summand: fn(k, coefficient, x exponent, (1-x) exponent).
template <class Fn>
void for_each_summand(const Side& side, const ParamBinding& b, Fn&& fn) {
  for (const auto& t : side) {
    auto [lo, hi] = eval_range(t, b);
    for (std::int64_t k = lo; k <= hi; ++k) {
      Env env{b, Rational(k)};
      Rational c;
      try {
        c = eval(t.coeff, env);
      } catch (PoleError& e) {
        throw PoleError(std::string(e.what()) + " at k=" + std::to_string(k));
      }
      if (c == 0) continue;
      fn(k, c, eval_exponent(t.x_exp, env), eval_exponent(t.omx_exp, env));
    }
  }
}

}  // namespace detail

// Fully expanded polynomial in x of one side, in the displayed orientation.
inline Polynomial eval_side(const IdentityDescriptor& d, SideId which, const ParamBinding& b) {
  const Polynomial x = Polynomial::var(kX);
  const Polynomial one_minus_x = Polynomial(1) - x;
  std::map<std::int64_t, Polynomial> omx_pows;
  Polynomial result;
  detail::for_each_summand(side_of(d, which), b, [&](std::int64_t, const Rational& c, std::int64_t a, std::int64_t bexp) {
    auto it = omx_pows.find(bexp);
    if (it == omx_pows.end()) it = omx_pows.emplace(bexp, pow(one_minus_x, static_cast<std::uint64_t>(bexp))).first;
    result += (it->second * Polynomial::monomial(Monomial::var(kX, static_cast<std::uint32_t>(a)), c));
  });
  if (d.negate_x) result = result.substitute(kX, -x);
  return result;
}

// Direct Rational summation of one side at x = x0; independent of the
// polynomial expansion in eval_side.
inline Rational eval_side_at(const IdentityDescriptor& d, SideId which, const ParamBinding& b, const Rational& x0) {
  const Rational y = d.negate_x ? Rational(-x0) : x0;
  Rational total = 0;
  detail::for_each_summand(side_of(d, which), b, [&](std::int64_t, const Rational& c, std::int64_t a, std::int64_t bexp) {
    total += c * combid::pow(y, a) * combid::pow(Rational(1) - y, bexp);
  });
  return total;
}

// Largest x-degree any summand of the side can contribute.
inline std::int64_t declared_max_exponent(const IdentityDescriptor& d, SideId which, const ParamBinding& b) {
  std::int64_t m = 0;
  for (const auto& t : side_of(d, which)) {
    auto [lo, hi] = detail::eval_range(t, b);
    for (std::int64_t k = lo; k <= hi; ++k) {
      Env env{b, Rational(k)};
      try {
        m = std::max(m, detail::eval_exponent(t.x_exp, env) + detail::eval_exponent(t.omx_exp, env));
      } catch (DomainError&) {
        // Exponents that are negative only on zero summands do not count.
      }
    }
  }
  return m;
}

// Side as a rational function in x and the given symbolic parameters.
inline RationalFunction eval_side_rf(const IdentityDescriptor& d, SideId which, const ParamBinding& b,
                                     const std::set<std::string>& symbols) {
  const Polynomial x = Polynomial::var(kX);
  const Polynomial y = d.negate_x ? -x : x;
  const Polynomial one_minus_y = Polynomial(1) - y;
  RationalFunction total;
  for (const auto& t : side_of(d, which)) {
    auto [lo, hi] = detail::eval_range(t, b);
    for (std::int64_t k = lo; k <= hi; ++k) {
      Env env{b, Rational(k)};
      RationalFunction c = eval_rf(t.coeff, env, symbols);
      if (c.is_zero()) continue;
      auto a = detail::eval_exponent(t.x_exp, env);
      auto e = detail::eval_exponent(t.omx_exp, env);
      total = total + c * RationalFunction(pow(y, a) * pow(one_minus_y, e));
    }
  }
  return total;
}

enum class CheckStatus { Verified, Failed, SkippedPole, SkippedPrecondition };

inline std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified: return "verified";
    case CheckStatus::Failed: return "failed";
    case CheckStatus::SkippedPole: return "skipped_pole";
    case CheckStatus::SkippedPrecondition: return "skipped_precondition";
  }
  return "failed";
}

struct CheckResult {
  std::string id;
  ParamBinding binding;
  CheckStatus status = CheckStatus::Failed;
  Polynomial lhs, rhs;
  std::string witness;  // first differing coefficient, or the reason for a skip
  bool in_region = true;  // every advisory constraint holds
};

namespace detail {

inline bool constraint_holds(const Constraint& c, const ParamBinding& b) {
  Env env{b};
  using K = Constraint::Kind;
  switch (c.kind) {
    case K::NotNonPositiveInteger: {
      Rational v = eval(c.args[0], env);
      return !(is_integer(v) && v <= 0);
    }
    case K::NotNegativeInteger: {
      Rational v = eval(c.args[0], env);
      return !(is_integer(v) && v < 0);
    }
    case K::IntegerValued:
      return is_integer(eval(c.args[0], env));
    case K::NonzeroBinomial:
      return detail::binom_value(eval(c.args[0], env), eval(c.args[1], env)) != 0;
    case K::Relation:
      return holds(eval(c.args[0], env), c.op, eval(c.args[1], env));
    case K::ForAllK: {
      auto lo = to_int64(eval(c.args[0], env), "bound"), hi = to_int64(eval(c.args[1], env), "bound");
      for (std::int64_t k = lo; k <= hi; ++k) {
        Env ek{b, Rational(k)};
        if (!holds(eval(c.args[2], ek), c.op, eval(c.args[3], ek))) return false;
      }
      return true;
    }
  }
  return false;
}

// Highest monomial (canonical order) where the two polynomials differ.
inline std::string first_difference(const Polynomial& a, const Polynomial& b) {
  Polynomial diff = a - b;
  if (diff.is_zero()) return {};
  const auto& [m, c] = diff.leading();
  return "coefficient of " + m.str() + ": lhs=" + to_string(a.coefficient(m)) +
         " rhs=" + to_string(b.coefficient(m));
}

}  // namespace detail

// Checks every enforced constraint. Returns the status to report when one
// fails (pole for a vanishing binomial, precondition otherwise).
inline std::optional<std::pair<CheckStatus, std::string>> precondition_failure(const IdentityDescriptor& d,
                                                                               const ParamBinding& b) {
  try {
    check_binding_kinds(d, b);
  } catch (Error& e) {
    return std::pair{CheckStatus::SkippedPrecondition, std::string(e.what())};
  }
  for (const auto& c : d.constraints) {
    if (!c.enforced) continue;
    try {
      if (!detail::constraint_holds(c, b)) {
        auto status = c.kind == Constraint::Kind::NonzeroBinomial ? CheckStatus::SkippedPole
                                                                  : CheckStatus::SkippedPrecondition;
        return std::pair{status, std::string("constraint violated")};
      }
    } catch (PoleError& e) {
      return std::pair{CheckStatus::SkippedPole, std::string(e.what())};
    } catch (Error& e) {
      return std::pair{CheckStatus::SkippedPrecondition, std::string(e.what())};
    }
  }
  return std::nullopt;
}

inline bool in_advisory_region(const IdentityDescriptor& d, const ParamBinding& b) {
  for (const auto& c : d.constraints) {
    if (c.enforced) continue;
    try {
      if (!detail::constraint_holds(c, b)) return false;
    } catch (Error&) {
      return false;
    }
  }
  return true;
}

// Verified iff both sides expand to the same polynomial in x. Errors are
// reported through the status, never thrown.
inline CheckResult check_two_sided(const IdentityDescriptor& d, const ParamBinding& b, const std::string& id = {}) {
  CheckResult r;
  r.id = id;
  r.binding = b;
  r.in_region = in_advisory_region(d, b);
  if (auto fail = precondition_failure(d, b)) {
    r.status = fail->first;
    r.witness = fail->second;
    return r;
  }
  try {
    r.lhs = eval_side(d, SideId::Left, b);
    r.rhs = eval_side(d, SideId::Right, b);
  } catch (PoleError& e) {
    r.status = CheckStatus::SkippedPole;
    r.witness = e.what();
    return r;
  } catch (Error& e) {
    r.status = CheckStatus::SkippedPrecondition;
    r.witness = e.what();
    return r;
  }
  if (r.lhs == r.rhs) {
    r.status = CheckStatus::Verified;
  } else {
    r.status = CheckStatus::Failed;
    r.witness = detail::first_difference(r.lhs, r.rhs);
  }
  return r;
}

// Symbolic check with some parameters left as indeterminates.
inline CheckResult check_symbolic(const IdentityDescriptor& d, const ParamBinding& b,
                                  const std::set<std::string>& symbols, const std::string& id = {}) {
  CheckResult r;
  r.id = id;
  r.binding = b;
  try {
    RationalFunction lhs = eval_side_rf(d, SideId::Left, b, symbols);
    RationalFunction rhs = eval_side_rf(d, SideId::Right, b, symbols);
    if (lhs == rhs) {
      r.status = CheckStatus::Verified;
    } else {
      r.status = CheckStatus::Failed;
      r.witness = "lhs=" + lhs.str() + " rhs=" + rhs.str();
    }
  } catch (PoleError& e) {
    r.status = CheckStatus::SkippedPole;
    r.witness = e.what();
  } catch (Error& e) {
    r.status = CheckStatus::SkippedPrecondition;
    r.witness = e.what();
  }
  return r;
}

// Swap the sides and replace x by 1-x.
inline IdentityDescriptor transpose(const IdentityDescriptor& d) {
  IdentityDescriptor t = d;
  std::swap(t.lhs, t.rhs);
  for (auto* side : {&t.lhs, &t.rhs})
    for (auto& term : *side) std::swap(term.x_exp, term.omx_exp);
  return t;
}

// Replace a parameter by an expression everywhere (e.g. n -> 2n, or r -> t).
// The declaration is renamed when `value` is an undeclared plain variable,
// kept when `value` still mentions the parameter, and dropped otherwise.
inline IdentityDescriptor substitute_param(const IdentityDescriptor& d, const std::string& name, const Expr& value) {
  IdentityDescriptor out = d;
  auto sub = [&](Expr& e) { e = substitute(e, name, value); };
  for (auto* side : {&out.lhs, &out.rhs})
    for (auto& t : *side) {
      sub(t.lo);
      sub(t.hi);
      sub(t.coeff);
      sub(t.x_exp);
      sub(t.omx_exp);
    }
  for (auto& c : out.constraints)
    for (auto& a : c.args) sub(a);
  std::vector<ParamDecl> params;
  for (auto p : out.params) {
    if (p.name == name) {
      auto v = as<Var>(value);
      if (v && !d.param(v->name)) {
        p.name = v->name;
        params.push_back(p);
      } else if (mentions(value, name)) {
        params.push_back(p);
      }
      continue;
    }
    params.push_back(p);
  }
  out.params = params;
  return out;
}

}  // namespace combid
