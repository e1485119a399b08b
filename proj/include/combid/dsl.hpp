#pragma once

// Text form of identities.
//
//   # Frisch's identity
//   params n:nat, r:rat, s:int;
//   require notnonposint(s);
//   region r - s + 1 > 0;
//   sum[k=0..n] (-1)^k * binom(n, k) * binom(k + r, s)^-1
//     == sum[k=0..0] s / (n + s) * binom(n + r, n + s)^-1;
//
// A side is one or more sums joined by + or -. The body of a sum is a
// product; factors x^e, (1-x)^e and (1+x)^e form the kernel, everything else
// the coefficient. Identities written with (1+x) are stored in the (1-x)
// normal form and flagged `negx`. `require` constraints gate evaluation;
// `region` constraints only describe where the identity was stated.
//
// print_descriptor emits the normal form; parse_descriptor(print_descriptor(d))
// reproduces d exactly.

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "combid/descriptor.hpp"
#include "combid/errors.hpp"
#include "combid/expr.hpp"

namespace combid {

namespace dsl {

struct Token {
  enum class Kind { Number, Ident, Punct, End } kind;
  std::string text;
  std::size_t line, column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  static constexpr std::string_view two_char[] = {"==", "..", "<=", ">=", "!="};
  static constexpr std::string_view one_char = "()[],;:+-*/^=<>";
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cl = col, start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
      out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)), l, cl});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) advance(1);
      out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)), l, cl});
      continue;
    }
    bool matched = false;
    for (auto p : two_char) {
      if (src.substr(i, 2) == p) {
        out.push_back({Token::Kind::Punct, std::string(p), l, cl});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (one_char.find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c), l, cl});
      advance(1);
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", l, cl);
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  IdentityDescriptor descriptor() {
    if (peek().kind == Token::Kind::End) fail("empty input");
    IdentityDescriptor d;
    bool have_params = false;
    for (;;) {
      if (accept_word("params")) {
        if (have_params) fail("duplicate params declaration");
        have_params = true;
        if (!accept(";")) {
          do {
            ParamDecl p;
            p.name = expect_ident("parameter name");
            if (p.name == "k" || p.name == "x") fail("'" + p.name + "' is reserved");
            expect(":");
            const Token& t = next();
            if (t.text == "nat") p.kind = ParamKind::Nat;
            else if (t.text == "int") p.kind = ParamKind::Int;
            else if (t.text == "rat") p.kind = ParamKind::Rat;
            else fail_at(t, "expected nat, int or rat");
            if (d.param(p.name)) fail_at(t, "duplicate parameter '" + p.name + "'");
            d.params.push_back(p);
          } while (accept(","));
          expect(";");
        }
      } else if (accept_word("negx")) {
        expect(";");
        d.negate_x = true;
      } else if (peek().text == "require" || peek().text == "region") {
        const bool enforced = next().text == "require";
        do {
          Constraint c = constraint();
          c.enforced = enforced;
          d.constraints.push_back(std::move(c));
        } while (accept(","));
        expect(";");
      } else {
        break;
      }
    }
    if (!have_params) fail("expected 'params' declaration");
    const Token& start = peek();
    std::vector<bool> plus_kernel;
    d.lhs = side(plus_kernel);
    expect("==");
    d.rhs = side(plus_kernel);
    accept(";");
    if (peek().kind != Token::Kind::End) fail("unexpected trailing input");
    normalize_orientation(d, plus_kernel, start);
    check_declared(d, start);
    return d;
  }

  Constraint constraint() {
    Constraint c;
    using K = Constraint::Kind;
    auto unary = [&](K kind) {
      c.kind = kind;
      expect("(");
      c.args = {expr()};
      expect(")");
    };
    if (accept_word("notnonposint")) unary(K::NotNonPositiveInteger);
    else if (accept_word("notnegint")) unary(K::NotNegativeInteger);
    else if (accept_word("integer")) unary(K::IntegerValued);
    else if (accept_word("nonzero")) {
      c.kind = K::NonzeroBinomial;
      expect("(");
      Expr b = expr();
      expect(")");
      auto call = as<Call>(b);
      if (!call || call->fn != Fn::Binom) fail("nonzero(...) expects a binomial");
      c.args = call->args;
    } else if (accept_word("forall")) {
      c.kind = K::ForAllK;
      if (expect_ident("'k'") != "k") fail("forall ranges over k");
      if (!accept_word("in")) fail("expected 'in'");
      Expr lo = expr();
      expect("..");
      Expr hi = expr();
      expect(":");
      auto [a, op, b] = relation();
      c.args = {lo, hi, a, b};
      c.op = op;
    } else {
      c.kind = K::Relation;
      auto [a, op, b] = relation();
      c.args = {a, b};
      c.op = op;
    }
    return c;
  }

  std::tuple<Expr, RelOp, Expr> relation() {
    Expr a = expr();
    const Token& t = next();
    RelOp op;
    if (t.text == "<") op = RelOp::Lt;
    else if (t.text == "<=") op = RelOp::Le;
    else if (t.text == ">") op = RelOp::Gt;
    else if (t.text == ">=") op = RelOp::Ge;
    else if (t.text == "==") op = RelOp::Eq;
    else if (t.text == "!=") op = RelOp::Ne;
    else fail_at(t, "expected a comparison operator");
    Expr b = expr();
    return {a, op, b};
  }

  Expr expr() {
    std::vector<Expr> items{term().e};
    while (peek().text == "+" || peek().text == "-") {
      const bool minus = next().text == "-";
      Expr t = term().e;
      items.push_back(minus ? ex::neg(t) : t);
    }
    return items.size() == 1 ? items[0] : ex::add(std::move(items));
  }

  bool at_end() const { return toks_[pos_].kind == Token::Kind::End; }

 private:
  struct Parsed {
    Expr e;
    bool literal_int = false;  // an integer literal, possibly negated
  };

  Parsed term() {
    Parsed acc = unary();
    std::vector<Expr> chain;  // pending n-ary product
    auto materialize = [&] {
      if (!chain.empty()) {
        acc = {ex::mul(std::move(chain)), false};
        chain.clear();
      }
    };
    while (peek().text == "*" || peek().text == "/") {
      if (next().text == "*") {
        Parsed rhs = unary();
        if (chain.empty()) chain.push_back(acc.e);
        chain.push_back(rhs.e);
      } else {
        materialize();
        const Token& at = peek();
        Parsed rhs = unary();
        if (acc.literal_int && rhs.literal_int) {
          const Rational den = as<Num>(rhs.e)->value;
          if (den == 0) fail_at(at, "division by zero literal");
          acc = {ex::num(as<Num>(acc.e)->value / den), false};
        } else {
          acc = {ex::div(acc.e, rhs.e), false};
        }
      }
    }
    materialize();
    return acc;
  }

  Parsed unary() {
    if (accept("-")) {
      Parsed inner = unary();
      if (inner.literal_int) return {ex::num(-as<Num>(inner.e)->value), true};
      return {ex::neg(inner.e), false};
    }
    return power();
  }

  Parsed power() {
    Parsed base = atom();
    if (!accept("^")) return base;
    Expr exponent;
    if (accept("-")) {
      Parsed e = atom();
      exponent = e.literal_int ? ex::num(-as<Num>(e.e)->value) : ex::neg(e.e);
    } else {
      exponent = atom().e;
    }
    return {ex::pow(base.e, exponent), false};
  }

  Parsed atom() {
    const Token& t = next();
    if (t.kind == Token::Kind::Number) return {ex::num(Rational(Integer(t.text))), true};
    if (t.kind == Token::Kind::Ident) {
      for (const auto& info : kFunctions) {
        if (info.name != t.text) continue;
        if (!accept("(")) fail_at(t, "expected '(' after " + t.text);
        std::vector<Expr> args;
        if (!accept(")")) {
          do args.push_back(expr());
          while (accept(","));
          expect(")");
        }
        if (args.size() != info.arity) {
          throw ArityError(t.text + " takes " + std::to_string(info.arity) + " arguments, got " +
                               std::to_string(args.size()),
                           t.line, t.column);
        }
        return {ex::call(info.fn, std::move(args)), false};
      }
      if (peek().text == "(") fail_at(t, "unknown function '" + t.text + "'");
      if (t.text == "sum") fail_at(t, "nested sums are not supported");
      return {ex::var(t.text), false};
    }
    if (t.text == "(") {
      Expr e = expr();
      expect(")");
      return {e, false};
    }
    fail_at(t, t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  Side side(std::vector<bool>& plus_kernel) {
    Side s;
    bool minus = accept("-");
    for (;;) {
      const Token& t = peek();
      if (!accept_word("sum")) fail_at(t, "expected 'sum'");
      expect("[");
      if (expect_ident("'k'") != "k") fail_at(t, "summation index must be k");
      expect("=");
      SumTerm term;
      term.lo = expr();
      expect("..");
      term.hi = expr();
      expect("]");
      Expr body = this->term().e;
      plus_kernel.push_back(split_kernel(body, term, t));
      if (minus) term.coeff = ex::neg(term.coeff);
      s.push_back(std::move(term));
      if (peek().text == "+" || peek().text == "-") {
        minus = next().text == "-";
        continue;
      }
      return s;
    }
  }

  // Moves kernel factors of `body` into term.x_exp / term.omx_exp. Returns
  // true when the (1-x) factor was written as (1+x).
  bool split_kernel(const Expr& body, SumTerm& term, const Token& where) {
    std::vector<Expr> factors;
    if (auto m = as<Mul>(body))
      factors = m->args;
    else
      factors = {body};
    std::vector<Expr> rest;
    bool have_x = false, have_omx = false, plus = false;
    auto is_x = [](const Expr& e) {
      auto v = as<Var>(e);
      return v && v->name == kX;
    };
    // 1 - x -> -1, 1 + x -> +1, otherwise 0
    auto one_pm_x = [&](const Expr& e) -> int {
      auto a = as<Add>(e);
      if (!a || a->args.size() != 2 || !ex::is_num(a->args[0], 1)) return 0;
      if (is_x(a->args[1])) return 1;
      if (auto n = as<Neg>(a->args[1]); n && is_x(n->arg)) return -1;
      return 0;
    };
    for (const auto& f : factors) {
      Expr base = f, exponent = ex::num(1);
      if (auto p = as<Pow>(f)) {
        base = p->base;
        exponent = p->exponent;
      }
      if (is_x(base)) {
        if (have_x) fail_at(where, "more than one x factor in a summand");
        have_x = true;
        term.x_exp = exponent;
      } else if (int sign = one_pm_x(base)) {
        if (have_omx) fail_at(where, "more than one (1-x) factor in a summand");
        have_omx = true;
        plus = sign > 0;
        term.omx_exp = exponent;
      } else {
        rest.push_back(f);
        continue;
      }
      if (mentions(exponent, kX)) fail_at(where, "kernel exponent depends on x");
    }
    for (const auto& f : rest)
      if (mentions(f, kX)) fail_at(where, "x may only appear as x^e, (1-x)^e or (1+x)^e");
    term.coeff = rest.empty() ? ex::num(1) : rest.size() == 1 ? rest[0] : ex::mul(std::move(rest));
    return plus && have_omx;
  }

  // Identities written with (1+x) are rewritten in y = -x: x^a picks up
  // (-1)^a and (1+x) becomes (1-y).
  void normalize_orientation(IdentityDescriptor& d, const std::vector<bool>& plus_kernel, const Token& where) {
    bool any_plus = false, any_minus = false;
    std::size_t i = 0;
    for (auto* s : {&d.lhs, &d.rhs})
      for (auto& t : *s) {
        const bool has_omx = !ex::is_num(t.omx_exp, 0) || plus_kernel[i];
        if (plus_kernel[i]) any_plus = true;
        else if (has_omx && !ex::is_num(t.omx_exp, 0)) any_minus = true;
        ++i;
      }
    if (!any_plus) return;
    if (any_minus) fail_at(where, "an identity may not mix (1+x) and (1-x) kernels");
    if (d.negate_x) fail_at(where, "(1+x) kernels cannot be combined with 'negx'");
    d.negate_x = true;
    for (auto* s : {&d.lhs, &d.rhs})
      for (auto& t : *s)
        if (!ex::is_num(t.x_exp, 0)) t.coeff = ex::times(t.coeff, ex::pow(ex::num(-1), t.x_exp));
  }

  void check_declared(const IdentityDescriptor& d, const Token& where) {
    std::set<std::string> vars;
    for (const auto* s : {&d.lhs, &d.rhs})
      for (const auto& t : *s)
        for (const auto& e : {t.lo, t.hi, t.coeff, t.x_exp, t.omx_exp}) collect_vars(e, vars);
    for (const auto& c : d.constraints)
      for (const auto& e : c.args) collect_vars(e, vars);
    for (const auto& v : vars)
      if (v != "k" && v != kX && !d.param(v)) fail_at(where, "undeclared parameter '" + v + "'");
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Token::Kind::End) ++pos_;
    return t;
  }
  bool accept(std::string_view punct) {
    if (peek().kind == Token::Kind::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view word) {
    if (peek().kind == Token::Kind::Ident && peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'");
  }
  std::string expect_ident(std::string_view what) {
    const Token& t = next();
    if (t.kind != Token::Kind::Ident) fail_at(t, "expected " + std::string(what));
    return t.text;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw SyntaxError(msg, t.line, t.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- printing ----

std::string str(const Expr& e);

inline bool is_plain_int(const Expr& e) {
  auto n = as<Num>(e);
  return n && is_integer(n->value) && n->value >= 0;
}

inline std::string num_str(const Rational& q) {
  if (is_integer(q) && q >= 0) return to_string(q);
  return "(" + to_string(q) + ")";
}

// Operand of a power base: atoms only.
inline std::string atom_str(const Expr& e) {
  if (is_plain_int(e) || as<Var>(e) || as<Call>(e)) return str(e);
  if (auto n = as<Num>(e)) return num_str(n->value);
  return "(" + str(e) + ")";
}

inline std::string exponent_str(const Expr& e) {
  if (auto n = as<Num>(e); n && is_integer(n->value)) return to_string(n->value);
  if (auto g = as<Neg>(e); g && (as<Var>(g->arg) || as<Call>(g->arg) || is_plain_int(g->arg)))
    return "-" + (is_plain_int(g->arg) ? "(" + str(g->arg) + ")" : str(g->arg));
  return atom_str(e);
}

// Factor inside a product, or operand of unary minus.
inline std::string unary_str(const Expr& e) {
  if (as<Add>(e) || as<Mul>(e) || as<Div>(e)) return "(" + str(e) + ")";
  if (auto n = as<Num>(e)) return num_str(n->value);
  return str(e);
}

// Operand of + or -.
inline std::string term_str(const Expr& e) {
  if (as<Add>(e)) return "(" + str(e) + ")";
  return str(e);
}

inline std::string str(const Expr& e) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Num>) return num_str(x.value);
        else if constexpr (std::is_same_v<T, Var>) return x.name;
        else if constexpr (std::is_same_v<T, Neg>) {
          if (as<Num>(x.arg)) return "-(" + to_string(as<Num>(x.arg)->value) + ")";
          return "-" + unary_str(x.arg);
        } else if constexpr (std::is_same_v<T, Add>) {
          std::string s = term_str(x.args[0]);
          for (std::size_t i = 1; i < x.args.size(); ++i) {
            if (auto g = as<Neg>(x.args[i]))
              s += " - " + term_str(g->arg);
            else
              s += " + " + term_str(x.args[i]);
          }
          return s;
        } else if constexpr (std::is_same_v<T, Mul>) {
          std::string s;
          for (const auto& a : x.args) s += (s.empty() ? "" : " * ") + unary_str(a);
          return s;
        } else if constexpr (std::is_same_v<T, Div>) {
          std::string num;
          if (as<Add>(x.num)) num = "(" + str(x.num) + ")";
          else if (is_plain_int(x.num) && is_plain_int(x.den)) num = "(" + str(x.num) + ")";
          else num = str(x.num);
          std::string den = (is_plain_int(x.den) || as<Var>(x.den) || as<Call>(x.den) || as<Pow>(x.den))
                                ? str(x.den)
                                : "(" + str(x.den) + ")";
          return num + " / " + den;
        } else if constexpr (std::is_same_v<T, Pow>) {
          return atom_str(x.base) + "^" + exponent_str(x.exponent);
        } else {
          std::string s(fn_info(x.fn).name);
          s += "(";
          for (std::size_t i = 0; i < x.args.size(); ++i) s += (i ? ", " : "") + str(x.args[i]);
          return s + ")";
        }
      },
      e->v);
}

inline std::string sum_str(const SumTerm& t, bool first) {
  Expr coeff = t.coeff;
  std::string sign;
  if (auto g = as<Neg>(coeff)) {
    sign = first ? "- " : " - ";
    coeff = g->arg;
  } else if (!first) {
    sign = " + ";
  }
  std::string body = as<Add>(coeff) ? "(" + str(coeff) + ")" : str(coeff);
  if (!ex::is_num(t.x_exp, 0)) body += " * x^" + exponent_str(t.x_exp);
  if (!ex::is_num(t.omx_exp, 0)) body += " * (1-x)^" + exponent_str(t.omx_exp);
  return sign + "sum[k=" + str(t.lo) + ".." + str(t.hi) + "] " + body;
}

inline std::string side_str(const Side& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += sum_str(s[i], i == 0);
  return out;
}

inline std::string constraint_str(const Constraint& c) {
  using K = Constraint::Kind;
  switch (c.kind) {
    case K::NotNonPositiveInteger: return "notnonposint(" + str(c.args[0]) + ")";
    case K::NotNegativeInteger: return "notnegint(" + str(c.args[0]) + ")";
    case K::IntegerValued: return "integer(" + str(c.args[0]) + ")";
    case K::NonzeroBinomial: return "nonzero(binom(" + str(c.args[0]) + ", " + str(c.args[1]) + "))";
    case K::Relation: return str(c.args[0]) + " " + std::string(rel_name(c.op)) + " " + str(c.args[1]);
    case K::ForAllK:
      return "forall k in " + str(c.args[0]) + ".." + str(c.args[1]) + ": " + str(c.args[2]) + " " +
             std::string(rel_name(c.op)) + " " + str(c.args[3]);
  }
  return {};
}

}  // namespace dsl

inline IdentityDescriptor parse_descriptor(std::string_view text) { return dsl::Parser(text).descriptor(); }

inline Expr parse_expr(std::string_view text) {
  dsl::Parser p(text);
  Expr e = p.expr();
  if (!p.at_end()) throw SyntaxError("unexpected trailing input in expression", 1, 1);
  return e;
}

inline Constraint parse_constraint(std::string_view text) {
  dsl::Parser p(text);
  Constraint c = p.constraint();
  if (!p.at_end()) throw SyntaxError("unexpected trailing input in constraint", 1, 1);
  return c;
}

inline std::string print_expr(const Expr& e) { return dsl::str(e); }

inline std::string print_descriptor(const IdentityDescriptor& d) {
  std::string out = "params";
  for (std::size_t i = 0; i < d.params.size(); ++i)
    out += (i ? ", " : " ") + d.params[i].name + ":" + std::string(kind_name(d.params[i].kind));
  out += ";\n";
  if (d.negate_x) out += "negx;\n";
  for (const auto& c : d.constraints) out += (c.enforced ? "require " : "region ") + dsl::constraint_str(c) + ";\n";
  out += dsl::side_str(d.lhs) + "\n  == " + dsl::side_str(d.rhs) + ";\n";
  return out;
}

}  // namespace combid
