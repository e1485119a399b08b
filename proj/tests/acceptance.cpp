// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "combid/combid.hpp"

using namespace combid;

namespace {

// Collects the first few problems of a criterion.
struct Probe {
  std::vector<std::string> problems;
  std::size_t checks = 0;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok && problems.size() == 5) problems.push_back("...");
  }
  bool ok() const { return problems.empty(); }
};

const IdentityDescriptor& desc(const std::string& key) { return find_entry(key).desc; }

Rational value(const IdentityDescriptor& d, SideId side, const ParamBinding& b) {
  Polynomial p = eval_side(d, side, b);
  if (!p.is_constant()) throw Error("side depends on x: " + p.str());
  return p.constant_term();
}

Rational sign_n(const ParamBinding& b) { return numerator(b.at("n")) % 2 == 0 ? 1 : -1; }

std::vector<ParamBinding> grid_of(const std::string& id, int max_n = 1000) {
  const auto& e = find_entry(id);
  std::vector<ParamBinding> out;
  for (auto& b : expand_grid(e.desc, e.default_grid))
    if (!b.count("n") || b.at("n") <= max_n) out.push_back(std::move(b));
  return out;
}

// derived = factor * target per side on every binding inside both domains.
std::size_t compare(Probe& p, const std::string& label, const IdentityDescriptor& derived,
                    const IdentityDescriptor& target, const std::vector<ParamBinding>& bindings,
                    const std::function<Rational(const ParamBinding&)>& factor) {
  std::size_t compared = 0;
  for (const auto& b : bindings) {
    if (precondition_failure(derived, b) || precondition_failure(target, b)) continue;
    Rational dl, dr, tl, tr;
    try {
      dl = value(derived, SideId::Left, b);
      dr = value(derived, SideId::Right, b);
      tl = value(target, SideId::Left, b);
      tr = value(target, SideId::Right, b);
    } catch (PoleError&) {
      continue;
    }
    const Rational f = factor(b);
    p.expect(dl == f * tl && dr == f * tr, label + " at " + binding_str(b));
    ++compared;
  }
  p.expect(compared > 0, label + ": nothing compared");
  return compared;
}

Integer pascal(int i, int j) {
  if (j < 0 || j > i) return 0;
  std::vector<Integer> row{1};
  for (int t = 1; t <= i; ++t) {
    std::vector<Integer> next(t + 1, 1);
    for (int u = 1; u < t; ++u) next[u] = row[u - 1] + row[u];
    row = next;
  }
  return row[j];
}

Rational one(const ParamBinding&) { return 1; }

// 1. Catalog soundness.
Probe catalog_soundness() {
  Probe p;
  auto start = std::chrono::steady_clock::now();
  std::size_t entries = 0;
  for (const auto& e : catalog()) {
    if (e.fixture) continue;
    auto r = verify_grid(e);
    ++entries;
    p.expect(r.counts.failed == 0, e.id + " failed on " + std::to_string(r.counts.failed) + " bindings");
    p.expect(r.counts.verified > 0, e.id + " verified nothing");
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  p.expect(entries >= 40, "fewer than 40 entries");
  p.expect(seconds < 120, "runtime " + std::to_string(seconds) + " s");
  std::ostringstream note;
  note << entries << " entries in " << seconds << " s";
  p.note = note.str();
  return p;
}

// 2. Frisch and Klamkin reproduction.
Probe frisch_klamkin() {
  Probe p;
  auto c03 = verify_entry("C03", {{"n", 1}, {"r", 1}, {"s", 1}});
  p.expect(c03.status == CheckStatus::Verified && c03.lhs == Polynomial(Rational(1, 2)) &&
               c03.rhs == Polynomial(Rational(1, 2)),
           "C03 at (1,1,1)");
  auto c04 = verify_entry("C04", {{"n", 1}, {"r", 3}, {"s", 1}});
  p.expect(c04.status == CheckStatus::Verified && c04.lhs == Polynomial(Rational(2, 3)) &&
               c04.rhs == Polynomial(Rational(2, 3)),
           "C04 at (1,3,1)");
  for (auto [id, poly, x0] : {std::tuple{"C03", "C01", -1}, std::tuple{"C04", "C02", 1}}) {
    std::size_t compared = 0;
    for (const auto& b : grid_of(id)) {
      if (precondition_failure(desc(id), b)) continue;
      try {
        for (auto side : {SideId::Left, SideId::Right})
          p.expect(eval_side_at(desc(poly), side, b, x0) == value(desc(id), side, b),
                   std::string(poly) + " at x=" + std::to_string(x0) + " vs " + id + " " + binding_str(b));
        ++compared;
      } catch (PoleError&) {
      }
    }
    p.expect(compared > 100, std::string(id) + ": too few bindings");
  }
  return p;
}

// 3. Polynomial identities in x.
Probe symbolic_polynomials() {
  Probe p;
  for (const char* id : {"C01", "C02"}) {
    std::size_t rational_r = 0;
    for (const auto& b : grid_of(id)) {
      auto r = check_two_sided(desc(id), b, id);
      p.expect(r.status != CheckStatus::Failed, std::string(id) + " " + binding_str(b) + ": " + r.witness);
      if (r.status == CheckStatus::Verified && !is_integer(b.at("r"))) ++rational_r;
    }
    p.expect(rational_r > 0, std::string(id) + ": no non-integer r verified");
  }
  const Polynomial want = Polynomial(Rational(1, 2)) + Polynomial::var("x").scaled(Rational(1, 3));
  ParamBinding b{{"n", 1}, {"r", 2}, {"s", 1}};
  p.expect(eval_side(desc("C01"), SideId::Left, b) == want && eval_side(desc("C01"), SideId::Right, b) == want,
           "spot value 1/2 + x/3");
  return p;
}

// 4. Scheme round trips.
Probe scheme_round_trips() {
  Probe p;
  const auto& gould = desc("gould");
  compare(p, "frisch(gould) vs C05", frisch_transform(gould).desc, desc("C05"), grid_of("C05"), one);
  compare(p, "frisch(gould)^T vs C06", frisch_transform(gould, Direction::Transposed).desc, desc("C06"), grid_of("C06"),
          one);
  compare(p, "klamkin(gould) vs C18", klamkin_transform(gould).desc, desc("C18"), grid_of("C18"), one);
  compare(p, "klamkin(gould)^T vs C19", klamkin_transform(gould, Direction::Transposed).desc, desc("C19"),
          grid_of("C19"), one);
  std::vector<ParamBinding> ns;
  for (int n = 0; n <= 8; ++n) ns.push_back({{"n", n}});
  const char* direct[] = {"C37", "C37.2", "C37.3"};
  const char* reflected[] = {"C38", "C38.2", "C38.3"};
  for (int m = 1; m <= 3; ++m) {
    auto d = bind_params(moment_transform(desc("simons"), MomentVariant::Direct), {{"m", m}});
    auto r = bind_params(moment_transform(desc("simons"), MomentVariant::Reflected), {{"m", m}});
    p.expect(compare(p, std::string("moment direct vs ") + direct[m - 1], d.desc, desc(direct[m - 1]), ns, one) == 9,
             direct[m - 1]);
    p.expect(compare(p, std::string("moment reflected vs ") + reflected[m - 1], r.desc, desc(reflected[m - 1]), ns,
                     sign_n) == 9,
             reflected[m - 1]);
  }
  // The cubic display against independent summation.
  for (int n = 0; n <= 8; ++n) {
    Integer lhs = 0;
    for (int k = 0; k <= n; ++k) {
      Integer t = Integer(k) * k * k * pascal(n, k) * pascal(n + k, k);
      lhs += k % 2 ? Integer(-t) : t;
    }
    Integer rhs = Integer(n) * n * (n + 1) * (n + 1) * (n * n + n + 1) / 6;
    if (n % 2) rhs = -rhs;
    p.expect(lhs == rhs, "cubic display n=" + std::to_string(n));
    p.expect(value(desc("C37.3"), SideId::Left, {{"n", n}}) == Rational(lhs), "C37.3 lhs n=" + std::to_string(n));
  }
  return p;
}

// 5. Dixon complements and Dixon's identity.
Probe dixon() {
  Probe p;
  auto macmahon2 = substitute_param(desc("macmahon"), "n", parse_expr("2 * n"));
  std::vector<ParamBinding> ns;
  for (int n = 0; n <= 5; ++n) ns.push_back({{"n", n}});
  for (int m = 1; m <= 2; ++m) {
    auto d = bind_params(moment_transform(macmahon2, MomentVariant::Direct), {{"m", m}});
    const char* target = m == 1 ? "C33" : "C34";
    p.expect(compare(p, std::string("moment(macmahon2) vs ") + target, d.desc, desc(target), ns, one) == 6, target);
  }
  for (int n = 0; n <= 5; ++n) {
    Rational s1 = 0, s2 = 0;
    for (int k = 0; k <= 2 * n; ++k) {
      Integer c = pascal(2 * n, k);
      Rational t = Rational(c * c * c) * (k % 2 ? -1 : 1);
      s1 += t * k;
      s2 += t * k * k;
    }
    Rational base = Rational(pascal(2 * n, n) * pascal(3 * n, n)) * (n % 2 ? -1 : 1);
    p.expect(s1 == base * n && s2 == base * Rational(2 * n * n, 3), "closed forms n=" + std::to_string(n));
  }
  for (int n = 0; n <= 10; ++n) {
    auto r = verify_entry("C35", {{"n", n}});
    p.expect(r.status == CheckStatus::Verified, "C35 n=" + std::to_string(n));
    if (n % 2) p.expect(r.lhs.is_zero() && r.rhs.is_zero(), "C35 odd branch n=" + std::to_string(n));
  }
  return p;
}

// 6. Beta integrals.
Probe beta() {
  Probe p;
  const Float50 tol("1e-10");
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b) {
      Rational exact = beta_integral_exact({a, b});
      p.expect(abs(beta_integral_quadrature({a, b}, 64) - to_float(exact)) < tol,
               "quadrature " + std::to_string(a) + "," + std::to_string(b));
    }
  std::size_t forms = 0;
  for (int r = 0; r <= 20; ++r)
    for (int k = 0; k <= 20; ++k)
      for (int s = 0; s <= 20; ++s)
        for (int n = k; n <= 20; ++n)
          for (const auto& f : packaged_beta_forms(r, k, s, n)) {
            if (f.args.a > 20 || f.args.b > 20) continue;
            ++forms;
            p.expect(beta_integral_exact(f.args) == f.value, f.name + " at r=" + std::to_string(r) +
                                                                 " k=" + std::to_string(k) + " s=" + std::to_string(s));
          }
  p.expect(forms > 1000, "too few packaged instances");
  return p;
}

// 7. Specializations at u = -1 and u = 0.
Probe specializations() {
  Probe p;
  auto check = [&](const std::string& label, const std::string& general, const std::string& special,
                   const std::function<std::optional<ParamBinding>(const ParamBinding&)>& lift,
                   const std::function<Rational(const ParamBinding&)>& factor, bool swap_sides) {
    std::size_t compared = 0;
    for (const auto& b : grid_of(special)) {
      auto g = lift(b);
      if (!g || precondition_failure(desc(special), b) || precondition_failure(desc(general), *g)) continue;
      try {
        Rational gl = value(desc(general), SideId::Left, *g), gr = value(desc(general), SideId::Right, *g);
        Rational sl = value(desc(special), SideId::Left, b), sr = value(desc(special), SideId::Right, b);
        if (swap_sides) std::swap(sl, sr);
        const Rational f = factor(*g);
        p.expect(gl == f * sl && gr == f * sr, label + " at " + binding_str(*g));
        ++compared;
      } catch (PoleError&) {
      }
    }
    p.expect(compared > 50, label + ": too few bindings");
  };
  auto set_u = [](Rational u) {
    return [u](const ParamBinding& b) -> std::optional<ParamBinding> {
      auto g = b;
      g["u"] = u;
      return g;
    };
  };
  check("C05 at u=-1", "C05", "C03", set_u(-1), sign_n, false);
  check("C06 at u=0", "C06", "C03", set_u(0), one, false);
  check("C18 at u=0", "C18", "C04", set_u(0), one, false);
  // C09 at s' corresponds to C19 at u = 0 and s = r - s' - n (integer r).
  check(
      "C19 at u=0", "C19", "C09",
      [](const ParamBinding& b) -> std::optional<ParamBinding> {
        if (!is_integer(b.at("r"))) return std::nullopt;
        auto g = b;
        g["u"] = 0;
        g["s"] = b.at("r") - b.at("s") - b.at("n");
        if (g["s"] < 0) return std::nullopt;
        return g;
      },
      [](const ParamBinding& g) { return g.at("r") + 1; }, true);
  return p;
}

// 8. Property suites.
Probe properties() {
  Probe p;
  std::vector<std::vector<Integer>> rows{{1}};
  for (int i = 1; i <= 60; ++i) {
    std::vector<Integer> row(i + 1, 1);
    for (int j = 1; j < i; ++j) row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
    rows.push_back(row);
  }
  for (int i = 0; i <= 60; ++i)
    for (int j = 0; j <= i; ++j) p.expect(binom_int(i, j) == rows[i][j], "pascal");
  for (int m = 1; m <= 25; ++m)
    for (int k = 1; k <= m; ++k)
      p.expect(stirling2(m, k) == Integer(k) * stirling2(m - 1, k) + stirling2(m - 1, k - 1), "stirling recurrence");
  for (int v = 0; v <= 8; ++v)
    for (int m = 1; m <= 15; ++m)
      for (int k = 1; k <= m; ++k)
        p.expect(r_stirling2(m, k, v) == Integer(k + v) * r_stirling2(m - 1, k, v) + r_stirling2(m - 1, k - 1, v),
                 "r-stirling recurrence");
  for (int m = 0; m <= 30; ++m)
    for (int k = 0; k <= m; ++k) p.expect(r_stirling2(m, k, 0) == stirling2(m, k), "r-stirling v=0");

  for (auto variant : {MomentVariant::Direct, MomentVariant::Swapped, MomentVariant::Reflected,
                       MomentVariant::SwappedReflected}) {
    auto d = moment_transform(desc("simons"), variant).desc;
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 8; ++n)
        for (int k = m + 1; k <= n; ++k)
          p.expect(eval_term(d.rhs[0].coeff, k, {{"m", m}, {"n", n}}) == 0,
                   std::string("truncation ") + std::string(variant_name(variant)));
  }

  for (const auto& e : catalog()) {
    p.expect(equal(transpose(transpose(e.desc)), e.desc), "transpose involution " + e.id);
    p.expect(equal(parse_descriptor(print_descriptor(e.desc)), e.desc), "round trip " + e.id);
    if (!e.fixture && e.id != "C01" && e.id != "C02") continue;
    const auto t = transpose(e.desc);
    for (const auto& b : expand_grid(e.desc, e.default_grid))
      p.expect(check_two_sided(e.desc, b).status == check_two_sided(t, b).status,
               "transposition " + e.id + " " + binding_str(b));
    TransformParams names;
    if (e.desc.param("r") || e.desc.param("s")) names = {"a", "b", "m"};
    for (auto dir : {Direction::Forward, Direction::Transposed}) {
      auto d = frisch_transform(e.desc, dir, names).desc;
      p.expect(equal(parse_descriptor(print_descriptor(d)), d), "round trip frisch(" + e.id + ")");
    }
  }
  return p;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Probe (*run)();
  };
  const Criterion criteria[] = {
      {1, "catalog soundness", catalog_soundness},
      {2, "Frisch/Klamkin reproduction", frisch_klamkin},
      {3, "polynomial identities in x", symbolic_polynomials},
      {4, "scheme round trips", scheme_round_trips},
      {5, "Dixon complements", dixon},
      {6, "Beta integral oracle", beta},
      {7, "specialization consistency", specializations},
      {8, "property suites", properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Probe p;
    try {
      p = c.run();
    } catch (const std::exception& e) {
      p.problems.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (p.ok() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << p.checks
              << " checks)" << (p.note.empty() ? "" : "; " + p.note) << '\n';
    for (const auto& problem : p.problems) std::cout << "  - " << problem << '\n';
    if (!p.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
