#pragma once

// Derivation schemes: Beta integrals and the transforms that turn a
// polynomial identity in x into a combinatorial one.
//
// A transform maps every kernel x^a (1-x)^b to a closed form, so it acts on
// each side independently and never looks at the particular shape of a
// summand:
//
//   Frisch   F[x^a (1-x)^b] = s/(b+s) * binom(a+b+r, b+s)^-1
//            (s times the integral against x^(r-s) (1-x)^(s-1))
//   Klamkin  K[x^a (1-x)^b] = (-1)^b (r+1)/(r-a+1) * binom(r-a, s+b)^-1
//            (x -> 1/x, then (r+1) times the integral against x^(r-s) (1-x)^s)
//   moment   M[x^a (1-x)^b] = sum_p (-1)^p binom(b,p) (a+p)^m
//            (x -> e^x, m-th derivative at 0)
//
// Transforms act on the stored (normal-form) variable; a `negx` flag on the
// input only changes how the source identity is displayed.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "combid/descriptor.hpp"
#include "combid/dsl.hpp"

namespace combid {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// ---------------------------------------------------------------------------
// Beta integrals

// Exponents of y and (1-y) in the integrand of int_0^1 y^a (1-y)^b dy.
struct BetaArgs {
  Rational a, b;
};

inline Rational beta_integral_exact(const BetaArgs& args) {
  if (!is_integer(args.a) || !is_integer(args.b) || args.a < 0 || args.b < 0)
    throw NonIntegerExponent("exact Beta integral needs non-negative integer exponents, got (" + to_string(args.a) +
                             ", " + to_string(args.b) + ")");
  auto a = to_int64(args.a, "exponent"), b = to_int64(args.b, "exponent");
  return Rational(factorial(a) * factorial(b), factorial(a + b + 1));
}

namespace detail {

template <unsigned N>
Float50 gauss_legendre(const BetaArgs& args) {
  const Float50 a(numerator(args.a)), b(numerator(args.b));
  const Float50 ad = a / Float50(denominator(args.a)), bd = b / Float50(denominator(args.b));
  auto f = [&](const Float50& y) { return boost::multiprecision::pow(y, ad) * boost::multiprecision::pow(1 - y, bd); };
  return boost::math::quadrature::gauss<Float50, N>::integrate(f, Float50(0), Float50(1));
}

}  // namespace detail

// Gauss-Legendre estimate with 16, 32, 64 or 128 nodes.
inline Float50 beta_integral_quadrature(const BetaArgs& args, unsigned nodes = 64) {
  if (args.a < 0 || args.b < 0)
    throw SingularExponent("quadrature needs a >= 0 and b >= 0, got (" + to_string(args.a) + ", " +
                           to_string(args.b) + ")");
  switch (nodes) {
    case 16: return detail::gauss_legendre<16>(args);
    case 32: return detail::gauss_legendre<32>(args);
    case 64: return detail::gauss_legendre<64>(args);
    case 128: return detail::gauss_legendre<128>(args);
    default: throw DomainError("unsupported node count " + std::to_string(nodes) + " (use 16, 32, 64 or 128)");
  }
}

inline Float50 to_float(const Rational& q) { return Float50(numerator(q)) / Float50(denominator(q)); }

// The four packaged Beta evaluations used by the transforms, for integer
// r, k, s (and n for the last). `value` is the binomial closed form.
struct PackagedBeta {
  std::string name;
  BetaArgs args;
  Rational value;
};

inline std::vector<PackagedBeta> packaged_beta_forms(std::int64_t r, std::int64_t k, std::int64_t s, std::int64_t n) {
  auto inv = [](const Integer& c) { return Rational(1) / Rational(c); };
  std::vector<PackagedBeta> out;
  if (s >= 1 && r + k - s >= 0)
    out.push_back({"frisch-lower", {r + k - s, s - 1}, Rational(1, s) * inv(binom_int(k + r, s))});
  if (k + s >= 1 && r - s >= 0)
    out.push_back({"frisch-upper", {r - s, k + s - 1}, Rational(1, k + s) * inv(binom_int(k + r, k + s))});
  if (k + s >= 0 && r - k - s >= 0)
    out.push_back({"klamkin-lower", {k + s, r - k - s}, Rational(1, r + 1) * inv(binom_int(r, k + s))});
  if (n - k + s >= 0 && r - n - s >= 0)
    out.push_back({"klamkin-shifted", {n - k + s, r - n - s}, Rational(1, r - k + 1) * inv(binom_int(r - k, r - s - n))});
  return out;
}

// ---------------------------------------------------------------------------
// Expression normalization for exponents and bounds

namespace detail {

inline std::optional<Polynomial> to_polynomial(const Expr& e) {
  return std::visit(
      [&](const auto& x) -> std::optional<Polynomial> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Num>) return Polynomial(x.value);
        else if constexpr (std::is_same_v<T, Var>) return Polynomial::var(x.name);
        else if constexpr (std::is_same_v<T, Neg>) {
          auto a = to_polynomial(x.arg);
          if (!a) return std::nullopt;
          return -*a;
        } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Mul>) {
          Polynomial acc = std::is_same_v<T, Add> ? Polynomial() : Polynomial(1);
          for (const auto& arg : x.args) {
            auto p = to_polynomial(arg);
            if (!p) return std::nullopt;
            if constexpr (std::is_same_v<T, Add>) acc += *p;
            else acc *= *p;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Pow>) {
          auto base = to_polynomial(x.base);
          auto ex = as<Num>(x.exponent);
          if (!base || !ex || !is_integer(ex->value) || ex->value < 0) return std::nullopt;
          return pow(*base, static_cast<std::uint64_t>(to_int64(ex->value, "exponent")));
        } else if constexpr (std::is_same_v<T, Div>) {
          auto num = to_polynomial(x.num);
          auto den = as<Num>(x.den);
          if (!num || !den || den->value == 0) return std::nullopt;
          return num->scaled(Rational(1) / den->value);
        } else {
          return std::nullopt;
        }
      },
      e->v);
}

// Terms print as: parameters, then the summation index, then the constant;
// positive terms first within each group.
inline Expr from_polynomial(const Polynomial& p) {
  if (p.is_zero()) return ex::num(0);
  std::vector<std::pair<Monomial, Rational>> ordered;
  for (int group = 0; group < 6; ++group)
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      int g = (it->first.is_one() ? 4 : it->first.degree("k") > 0 ? 2 : 0) + (it->second < 0 ? 1 : 0);
      if (g == group) ordered.emplace_back(it->first, it->second);
    }
  Expr acc;
  for (const auto& [m, c] : ordered) {
    std::vector<Expr> factors;
    for (const auto& [name, e] : m.factors())
      factors.push_back(e == 1 ? ex::var(name) : ex::pow(ex::var(name), ex::num(static_cast<long long>(e))));
    Expr body = factors.empty() ? nullptr : factors.size() == 1 ? factors[0] : ex::mul(factors);
    Rational mag = c < 0 ? Rational(-c) : c;
    Expr term = !body ? ex::num(mag) : mag == 1 ? body : ex::times(ex::num(mag), body);
    if (!acc)
      acc = c < 0 ? (as<Num>(term) ? ex::num(c) : ex::neg(term)) : term;
    else
      acc = c < 0 ? ex::minus(acc, term) : ex::plus(acc, term);
  }
  return acc;
}

// Canonical form of polynomial expressions; other expressions pass through.
inline Expr normalize(const Expr& e) {
  auto p = to_polynomial(e);
  return p ? from_polynomial(*p) : e;
}

// Normalizes function arguments and exponents throughout a coefficient.
inline Expr simplify(const Expr& e) {
  auto all = [](const std::vector<Expr>& args) {
    std::vector<Expr> out;
    for (const auto& a : args) out.push_back(simplify(a));
    return out;
  };
  return std::visit(
      [&](const auto& x) -> Expr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Call>) {
          std::vector<Expr> args;
          for (const auto& a : x.args) args.push_back(normalize(simplify(a)));
          return ex::call(x.fn, std::move(args));
        } else if constexpr (std::is_same_v<T, Pow>) {
          return ex::pow(simplify(x.base), normalize(x.exponent));
        } else if constexpr (std::is_same_v<T, Neg>) {
          return ex::neg(simplify(x.arg));
        } else if constexpr (std::is_same_v<T, Add>) {
          return ex::add(all(x.args));
        } else if constexpr (std::is_same_v<T, Mul>) {
          return ex::mul(all(x.args));
        } else if constexpr (std::is_same_v<T, Div>) {
          return ex::div(simplify(x.num), simplify(x.den));
        } else {
          return e;
        }
      },
      e->v);
}

inline Expr norm_plus(const Expr& a, const Expr& b) { return normalize(ex::plus(a, b)); }
inline Expr norm_minus(const Expr& a, const Expr& b) { return normalize(ex::minus(a, b)); }

inline bool is_zero_literal(const Expr& e) { return ex::is_num(e, 0); }

// (-1)^b, omitted when b is literally 0.
inline Expr sign_power(const Expr& b) { return is_zero_literal(b) ? ex::num(1) : ex::pow(ex::num(-1), b); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Derived identities

struct Provenance {
  std::string source;     // id or name of the input identity
  std::string transform;  // frisch | klamkin | moment
  std::map<std::string, std::string> args;
};

struct DerivedIdentity {
  IdentityDescriptor desc;
  Provenance provenance;

  std::string dsl() const {
    std::string header = "# derived by " + provenance.transform + " from " + provenance.source;
    for (const auto& [k, v] : provenance.args) header += ", " + k + "=" + v;
    return header + "\n" + print_descriptor(desc);
  }
};

enum class Direction { Forward, Transposed };
enum class MomentVariant { Direct, Swapped, Reflected, SwappedReflected };

inline std::string_view direction_name(Direction d) { return d == Direction::Forward ? "forward" : "transposed"; }

inline std::string_view variant_name(MomentVariant v) {
  switch (v) {
    case MomentVariant::Direct: return "direct";
    case MomentVariant::Swapped: return "swapped";
    case MomentVariant::Reflected: return "reflected";
    case MomentVariant::SwappedReflected: return "swapped_reflected";
  }
  return "direct";
}

// Names of the parameters a transform introduces.
struct TransformParams {
  std::string r = "r";
  std::string s = "s";
  std::string m = "m";
};

namespace detail {

inline void declare(IdentityDescriptor& d, const std::string& name, ParamKind kind) {
  if (name == "k" || name == kX) throw Error("parameter name '" + name + "' is reserved");
  if (d.param(name)) throw Error("parameter '" + name + "' is already declared by the input identity");
  d.params.push_back({name, kind});
}

// Applies `kernel(a, b)` to every summand, keeping coefficient order so that
// zero factors still short-circuit before the new ones.
template <class KernelFn>
Side map_side(const Side& side, KernelFn&& kernel) {
  Side out;
  for (const auto& t : side) {
    SumTerm n;
    n.lo = t.lo;
    n.hi = t.hi;
    n.coeff = ex::times(t.coeff, kernel(t.x_exp, t.omx_exp));
    n.x_exp = ex::num(0);
    n.omx_exp = ex::num(0);
    out.push_back(std::move(n));
  }
  return out;
}

inline IdentityDescriptor oriented(const IdentityDescriptor& d, Direction dir) {
  IdentityDescriptor src = dir == Direction::Forward ? d : transpose(d);
  src.negate_x = false;
  return src;
}

}  // namespace detail

// Frisch-type transform with symbolic r (rational) and s (integer).
inline DerivedIdentity frisch_transform(const IdentityDescriptor& desc, Direction dir = Direction::Forward,
                                        const TransformParams& names = {}, const std::string& source = "input") {
  IdentityDescriptor src = detail::oriented(desc, dir);
  const Expr r = ex::var(names.r), s = ex::var(names.s);
  auto kernel = [&](const Expr& a, const Expr& b) -> Expr {
    if (detail::is_zero_literal(b)) return ex::inv_binom(detail::norm_plus(a, r), s);
    Expr upper = detail::norm_plus(detail::norm_plus(a, b), r);
    Expr lower = detail::norm_plus(b, s);
    return ex::times(ex::div(s, lower), ex::inv_binom(upper, lower));
  };
  DerivedIdentity out;
  out.desc.params = src.params;
  detail::declare(out.desc, names.r, ParamKind::Rat);
  detail::declare(out.desc, names.s, ParamKind::Int);
  out.desc.lhs = detail::map_side(src.lhs, kernel);
  out.desc.rhs = detail::map_side(src.rhs, kernel);
  out.desc.constraints = src.constraints;
  out.desc.constraints.push_back({Constraint::Kind::NotNonPositiveInteger, {s}});
  out.provenance = {source, "frisch", {{"direction", std::string(direction_name(dir))}}};
  return out;
}

// Klamkin-type transform; sides come out exchanged, as in the usual
// statement (the (1-x) side on the left).
inline DerivedIdentity klamkin_transform(const IdentityDescriptor& desc, Direction dir = Direction::Forward,
                                         const TransformParams& names = {}, const std::string& source = "input") {
  IdentityDescriptor src = detail::oriented(desc, dir);
  const Expr r = ex::var(names.r), s = ex::var(names.s);
  auto kernel = [&](const Expr& a, const Expr& b) -> Expr {
    Expr lower = detail::norm_plus(s, b);
    if (detail::is_zero_literal(a)) return ex::times(detail::sign_power(b), ex::inv_binom(r, lower));
    Expr ra = detail::norm_minus(r, a);
    Expr factor = ex::div(detail::norm_plus(r, ex::num(1)), detail::norm_plus(ra, ex::num(1)));
    return ex::product({detail::sign_power(b), factor, ex::inv_binom(ra, lower)});
  };
  DerivedIdentity out;
  out.desc.params = src.params;
  detail::declare(out.desc, names.r, ParamKind::Rat);
  detail::declare(out.desc, names.s, ParamKind::Int);
  out.desc.lhs = detail::map_side(src.rhs, kernel);
  out.desc.rhs = detail::map_side(src.lhs, kernel);
  out.desc.constraints = src.constraints;
  out.desc.constraints.push_back({Constraint::Kind::NotNegativeInteger, {s}});
  out.provenance = {source, "klamkin", {{"direction", std::string(direction_name(dir))}}};
  return out;
}

// Fixes the introduced parameters to concrete values.
inline DerivedIdentity bind_params(DerivedIdentity d, const std::map<std::string, Rational>& values) {
  for (const auto& [name, v] : values) {
    if (!d.desc.param(name)) throw UnboundParameter(name);
    d.desc = substitute_param(d.desc, name, ex::num(v));
    d.provenance.args[name] = to_string(v);
  }
  // A fully bound result must be pole-free somewhere to be meaningful.
  if (d.desc.params.empty()) {
    ParamBinding none;
    for (auto side : {SideId::Left, SideId::Right}) eval_side(d.desc, side, none);
  }
  return d;
}

// Whether the descriptor has the shape sum_{k=0}^{N} f(k) x^k = sum_{k=0}^{N} g(k) (1-x)^k.
inline bool has_moment_shape(const IdentityDescriptor& d) {
  if (d.lhs.size() != 1 || d.rhs.size() != 1) return false;
  const auto &l = d.lhs[0], &r = d.rhs[0];
  auto is_k = [](const Expr& e) { auto v = as<Var>(e); return v && v->name == "k"; };
  return ex::is_num(l.lo, 0) && ex::is_num(r.lo, 0) && equal(l.hi, r.hi) && is_k(l.x_exp) &&
         ex::is_num(l.omx_exp, 0) && ex::is_num(r.x_exp, 0) && is_k(r.omx_exp);
}

// Moment transforms. Direct and Swapped accept any descriptor with integer
// kernels; the reflected variants need the shape checked by has_moment_shape.
inline DerivedIdentity moment_transform(const IdentityDescriptor& desc, MomentVariant variant,
                                        const TransformParams& names = {}, const std::string& source = "input") {
  const bool swapped = variant == MomentVariant::Swapped || variant == MomentVariant::SwappedReflected;
  const bool reflected = variant == MomentVariant::Reflected || variant == MomentVariant::SwappedReflected;
  IdentityDescriptor src = swapped ? transpose(desc) : desc;
  src.negate_x = false;
  const Expr m = ex::var(names.m);
  const Expr k = ex::var("k");

  DerivedIdentity out;
  out.desc.params = src.params;
  detail::declare(out.desc, names.m, ParamKind::Nat);
  out.desc.constraints = src.constraints;
  out.provenance = {source, "moment", {{"variant", std::string(variant_name(variant))}}};

  if (reflected) {
    if (!has_moment_shape(src))
      throw ShapeError("reflected moment transform needs sum_{k=0}^{N} f(k) x^k == sum_{k=0}^{N} g(k) (1-x)^k");
    const SumTerm &f = src.lhs[0], &g = src.rhs[0];
    const Expr n = f.hi;
    Expr nk = detail::norm_minus(n, k);
    out.desc.lhs = {{ex::num(0), n, ex::times(ex::pow(k, m), detail::simplify(substitute(f.coeff, "k", nk)))}};
    out.desc.rhs = {{ex::num(0), ex::call(Fn::Min, {m, n}),
                     ex::times(g.coeff, ex::product({ex::call(Fn::Fact, {k}),
                                                     ex::call(Fn::RStirling, {m, k, nk})}))}};
    return out;
  }

  auto map = [&](const Side& side) {
    Side res;
    for (const auto& t : side) {
      SumTerm n;
      n.lo = t.lo;
      n.hi = t.hi;
      const Expr &a = t.x_exp, &b = t.omx_exp;
      Expr w;
      if (detail::is_zero_literal(b)) {
        w = ex::pow(a, m);
      } else if (detail::is_zero_literal(a)) {
        // (-1)^b b! S(m, b); vanishes for b > m.
        w = ex::product({detail::sign_power(b), ex::call(Fn::Fact, {b}), ex::call(Fn::Stirling, {m, b})});
        if (auto v = as<Var>(b); v && v->name == "k") n.hi = ex::call(Fn::Min, {m, t.hi});
      } else {
        w = ex::call(Fn::DSum, {b, a, m});
      }
      n.coeff = ex::times(t.coeff, w);
      res.push_back(std::move(n));
    }
    return res;
  };
  out.desc.lhs = map(src.lhs);
  out.desc.rhs = map(src.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Descriptor rewrites (acting on the normal-form variable)

enum class RewriteRule { NegateX, ReciprocalX, ReflectX };

namespace detail {

// Nat-valued parameters, for deciding when one degree bound dominates another.
inline bool dominates(const Expr& big, const Expr& small, const IdentityDescriptor& d) {
  auto pb = to_polynomial(big), ps = to_polynomial(small);
  if (!pb || !ps) return false;
  Polynomial diff = *pb - *ps;
  for (const auto& [mono, c] : diff.terms()) {
    if (c < 0) return false;
    for (const auto& [name, e] : mono.factors()) {
      auto p = d.param(name);
      if (!p || p->kind != ParamKind::Nat) return false;
    }
  }
  return true;
}

// Upper bound N on a + b over every summand, as an expression in the parameters.
inline Expr total_degree_bound(const IdentityDescriptor& d) {
  std::vector<Expr> candidates;
  auto add = [&](const Expr& e) {
    Expr c = normalize(e);
    if (mentions(c, "k")) throw ShapeError("kernel degree is not linear enough to bound: " + print_expr(c));
    for (const auto& x : candidates)
      if (equal(x, c)) return;
    candidates.push_back(c);
  };
  for (const auto* side : {&d.lhs, &d.rhs})
    for (const auto& t : *side) {
      Expr deg = normalize(ex::plus(t.x_exp, t.omx_exp));
      auto p = to_polynomial(deg);
      if (!mentions(deg, "k")) {
        add(deg);
      } else if (p && p->degree("k") == 1) {
        // Linear in k: the extreme is at one of the range ends.
        add(substitute(deg, "k", t.lo));
        add(substitute(deg, "k", t.hi));
      } else {
        throw ShapeError("kernel degree must be at most linear in k: " + print_expr(deg));
      }
    }
  std::vector<Expr> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
      if (i != j && dominates(candidates[j], candidates[i], d) && !(j > i && dominates(candidates[i], candidates[j], d)))
        dominated = true;
    if (!dominated) kept.push_back(candidates[i]);
  }
  Expr n = kept.front();
  for (std::size_t i = 1; i < kept.size(); ++i) n = ex::call(Fn::Max, {n, kept[i]});
  return n;
}

}  // namespace detail

inline IdentityDescriptor rewrite_descriptor(const IdentityDescriptor& d, RewriteRule rule) {
  IdentityDescriptor out = d;
  switch (rule) {
    case RewriteRule::NegateX:
      out.negate_x = !d.negate_x;
      return out;
    case RewriteRule::ReflectX:
      for (auto* side : {&out.lhs, &out.rhs})
        for (auto& t : *side) std::swap(t.x_exp, t.omx_exp);
      return out;
    case RewriteRule::ReciprocalX: {
      // x^a (1-x)^b -> x^N (1/x)^a (1 - 1/x)^b = (-1)^b x^(N-a-b) (1-x)^b
      const Expr n = detail::total_degree_bound(d);
      for (auto* side : {&out.lhs, &out.rhs})
        for (auto& t : *side) {
          t.coeff = ex::times(t.coeff, detail::sign_power(t.omx_exp));
          t.x_exp = detail::normalize(ex::minus(n, ex::plus(t.x_exp, t.omx_exp)));
        }
      return out;
    }
  }
  return out;
}

}  // namespace combid
