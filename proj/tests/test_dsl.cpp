#include <gtest/gtest.h>

#include "combid/catalog.hpp"
#include "combid/dsl.hpp"
#include "combid/eval.hpp"
#include "combid/schemes.hpp"

using namespace combid;

namespace {

Rational value(std::string_view text, const ParamBinding& b = {}) { return eval(parse_expr(text), Env{b}); }

void expect_round_trip(const IdentityDescriptor& d, const std::string& label) {
  const std::string printed = print_descriptor(d);
  IdentityDescriptor back = parse_descriptor(printed);
  EXPECT_TRUE(equal(d, back)) << label << "\n" << printed;
  EXPECT_EQ(print_descriptor(back), printed) << label;
}

}  // namespace

TEST(DslRoundTrip, EveryCatalogEntry) {
  for (const auto& e : catalog()) expect_round_trip(e.desc, e.id);
}

TEST(DslRoundTrip, DerivedIdentities) {
  for (const auto& e : catalog()) {
    if (!e.fixture) continue;
    for (auto dir : {Direction::Forward, Direction::Transposed}) {
      expect_round_trip(frisch_transform(e.desc, dir).desc, e.id + " frisch");
      expect_round_trip(klamkin_transform(e.desc, dir).desc, e.id + " klamkin");
    }
    for (auto v : {MomentVariant::Direct, MomentVariant::Swapped})
      expect_round_trip(moment_transform(e.desc, v).desc, e.id + " moment");
  }
}

TEST(DslRoundTrip, PlusKernelKeepsFlag) {
  auto d = find_entry("poly1").desc;
  EXPECT_TRUE(d.negate_x);
  expect_round_trip(d, "poly1");
  EXPECT_NE(print_descriptor(d).find("negx;"), std::string::npos);
}

TEST(DslExpr, PrecedenceAndAssociativity) {
  EXPECT_EQ(value("2 + 3 * 4"), 14);
  EXPECT_EQ(value("2 * 3^2"), 18);
  EXPECT_EQ(value("-2^2"), -4);
  EXPECT_EQ(value("(-2)^2"), 4);
  EXPECT_EQ(value("12 / 3 / 2"), 2);
  EXPECT_EQ(value("10 - 3 - 2"), 5);
  EXPECT_EQ(value("2^-1"), Rational(1, 2));
  EXPECT_EQ(value("7/2 + 1/3"), Rational(23, 6));
}

TEST(DslExpr, Functions) {
  ParamBinding b{{"n", 6}, {"r", Rational(7, 2)}};
  EXPECT_EQ(value("binom(n, 2)", b), 15);
  EXPECT_EQ(value("binom(r, 2)", b), Rational(35, 8));
  EXPECT_EQ(value("binom(n, -1)", b), 0);
  EXPECT_EQ(value("fact(n)", b), 720);
  EXPECT_EQ(value("stirling(n, 2)", b), 31);
  EXPECT_EQ(value("rstirling(2, 1, 1)", b), 3);
  EXPECT_EQ(value("dsum(2, 0, 2)", b), 2);
  EXPECT_EQ(value("floor(r)", b), 3);
  EXPECT_EQ(value("min(n, 2) + max(n, 2)", b), 8);
  EXPECT_EQ(value("even(n) + even(n + 1)", b), 1);
  EXPECT_THROW(value("binom(n, r)", b), DomainError);
  EXPECT_THROW(value("binom(3, 5)^-1"), PoleError);
  EXPECT_THROW(value("1 / (n - 6)", b), PoleError);
  EXPECT_THROW(value("q + 1"), UnboundParameter);
}

TEST(DslErrors, PositionsAndKinds) {
  try {
    parse_descriptor("params n:nat;\nsum[k=0..n] binom(n) * x^k == sum[k=0..n] 1;");
    FAIL() << "expected ArityError";
  } catch (const ArityError& e) {
    EXPECT_EQ(e.line, 2u);
  }
  try {
    parse_descriptor("params n:nat;\nsum[k=0..n] 1 ++ == 1;");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_GT(e.column, 1u);
  }
  EXPECT_THROW(parse_descriptor(""), SyntaxError);
  EXPECT_THROW(parse_descriptor("sum[k=0..n] 1 == sum[k=0..n] 1;"), SyntaxError);
  EXPECT_THROW(parse_descriptor("params n:nat, n:int; sum[k=0..n] 1 == sum[k=0..n] 1;"), SyntaxError);
  EXPECT_THROW(parse_descriptor("params k:nat; sum[k=0..k] 1 == sum[k=0..k] 1;"), SyntaxError);
  EXPECT_THROW(parse_descriptor("params n:real; sum[k=0..n] 1 == sum[k=0..n] 1;"), SyntaxError);
  EXPECT_THROW(parse_descriptor("params n:nat; sum[k=0..n] q * x^k == sum[k=0..n] 1;"), SyntaxError);
  EXPECT_THROW(parse_descriptor("params n:nat; sum[k=0..n] 1 == sum[k=0..n] 1; extra"), SyntaxError);
  EXPECT_THROW(parse_expr("1 +"), SyntaxError);
  EXPECT_THROW(parse_expr("nosuch(1)"), SyntaxError);
}

TEST(DslConstraints, ParseAndPrint) {
  auto c = parse_constraint("r - s + 1 > 0");
  EXPECT_EQ(dsl::constraint_str(c), "r - s + 1 > 0");
  auto d = parse_descriptor("params n:nat, s:int; require notnegint(s), n >= 1; region s <= n;"
                            "sum[k=0..n] 1 == sum[k=0..n] 1;");
  ASSERT_EQ(d.constraints.size(), 3u);
  EXPECT_TRUE(d.constraints[0].enforced);
  EXPECT_TRUE(d.constraints[1].enforced);
  EXPECT_FALSE(d.constraints[2].enforced);
  expect_round_trip(d, "constraints");
}
