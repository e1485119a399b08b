#pragma once

// Parameter grids and exhaustive, order-deterministic grid verification.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "combid/descriptor.hpp"
#include "combid/dsl.hpp"

namespace combid {

// Per-parameter value lists; the grid is their cartesian product (in the
// order listed), restricted by `filters` and optionally by the identity's
// advisory region.
struct GridSpec {
  std::vector<std::pair<std::string, std::vector<Rational>>> values;
  std::vector<Constraint> filters;
  bool region_only = false;

  std::vector<Rational>* find(const std::string& name) {
    for (auto& [n, v] : values)
      if (n == name) return &v;
    return nullptr;
  }

  // Replaces (or adds) the value list of one parameter.
  void set(const std::string& name, std::vector<Rational> list) {
    if (auto* v = find(name))
      *v = std::move(list);
    else
      values.emplace_back(name, std::move(list));
  }
};

// "0..10", "1,2,7/2" or a mix such as "1..5,7/2". Ranges need integer ends.
inline std::vector<Rational> parse_value_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) throw Error("empty value in list '" + std::string(text) + "'");
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      auto lo = parse_rational(trim(item.substr(0, dots)));
      auto hi = parse_rational(trim(item.substr(dots + 2)));
      if (!lo || !hi || !is_integer(*lo) || !is_integer(*hi))
        throw Error("malformed range '" + std::string(item) + "'");
      for (Rational v = *lo; v <= *hi; v += 1) out.push_back(v);
    } else {
      auto v = parse_rational(item);
      if (!v) throw Error("malformed rational '" + std::string(item) + "'");
      out.push_back(*v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// "n=0..10; r=1..6,7/2; s=1..4 | s <= r, inregion"
inline GridSpec parse_grid(std::string_view text) {
  GridSpec g;
  auto bar = text.find('|');
  std::string_view assigns = text.substr(0, bar);
  std::size_t start = 0;
  while (start < assigns.size()) {
    auto semi = assigns.find(';', start);
    std::string_view part = assigns.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    start = semi == std::string_view::npos ? assigns.size() : semi + 1;
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw Error("grid entry without '=': '" + std::string(part) + "'");
    std::string name(part.substr(0, eq));
    while (!name.empty() && name.back() == ' ') name.pop_back();
    g.set(name, parse_value_list(part.substr(eq + 1)));
  }
  if (bar != std::string_view::npos) {
    std::string_view rest = text.substr(bar + 1);
    std::size_t s = 0;
    while (s < rest.size()) {
      auto comma = rest.find(',', s);
      std::string item(rest.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s));
      s = comma == std::string_view::npos ? rest.size() : comma + 1;
      if (item.find_first_not_of(' ') == std::string::npos) continue;
      if (item.find("inregion") != std::string::npos)
        g.region_only = true;
      else
        g.filters.push_back(parse_constraint(item));
    }
  }
  return g;
}

// Cartesian product in declaration order of the descriptor's parameters.
inline std::vector<ParamBinding> expand_grid(const IdentityDescriptor& d, const GridSpec& g) {
  std::vector<std::pair<std::string, const std::vector<Rational>*>> axes;
  for (const auto& p : d.params) {
    const std::vector<Rational>* values = nullptr;
    for (const auto& [n, v] : g.values)
      if (n == p.name) values = &v;
    if (!values) throw EmptyGrid("grid has no values for parameter '" + p.name + "'");
    if (values->empty()) throw EmptyGrid("grid has an empty value list for '" + p.name + "'");
    axes.emplace_back(p.name, values);
  }
  std::vector<ParamBinding> out;
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    ParamBinding b;
    for (std::size_t i = 0; i < axes.size(); ++i) b[axes[i].first] = (*axes[i].second)[idx[i]];
    bool keep = true;
    for (const auto& f : g.filters) {
      try {
        if (!detail::constraint_holds(f, b)) keep = false;
      } catch (Error&) {
        keep = false;
      }
    }
    if (keep && g.region_only && !in_advisory_region(d, b)) keep = false;
    if (keep) out.push_back(std::move(b));
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++idx[i] < axes[i].second->size()) break;
      idx[i] = 0;
      if (i == 0) {
        i = axes.size() + 1;
        break;
      }
    }
    if (axes.empty() || i == axes.size() + 1) break;
  }
  if (out.empty()) throw EmptyGrid("grid is empty after filtering");
  return out;
}

// Deterministic subsample of `count` bindings (order preserved).
inline std::vector<ParamBinding> sample_bindings(const std::vector<ParamBinding>& all, std::size_t count,
                                                 std::uint64_t seed) {
  if (count >= all.size()) return all;
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  std::vector<ParamBinding> out;
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

struct GridCounts {
  std::size_t verified = 0, failed = 0, skipped_pole = 0, skipped_precondition = 0;
  std::size_t total() const { return verified + failed + skipped_pole + skipped_precondition; }
};

struct GridReport {
  std::string id;
  std::string anchor;
  GridCounts counts;
  std::size_t verified_outside_region = 0;
  std::vector<CheckResult> witnesses;  // first failures in grid order, at most kMaxWitnesses
  static constexpr std::size_t kMaxWitnesses = 10;
};

inline std::string binding_str(const ParamBinding& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : ", ") + k + "=" + to_string(v);
  return s;
}

// Worker count: explicit value, else COMBID_THREADS, else hardware threads.
inline unsigned resolve_threads(unsigned requested) {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("COMBID_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) cap = static_cast<unsigned>(v);
  }
  if (requested == 0) return cap;
  return std::min(requested, cap);
}

// Runs check_two_sided over every binding; the report does not depend on the
// number of workers.
inline GridReport verify_bindings(const IdentityDescriptor& d, const std::vector<ParamBinding>& bindings,
                                  const std::string& id, unsigned threads = 0) {
  std::vector<CheckResult> results(bindings.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < bindings.size(); i = next++) results[i] = check_two_sided(d, bindings[i], id);
  };
  const unsigned n = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(1, bindings.size()));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  GridReport report;
  report.id = id;
  for (auto& r : results) {
    switch (r.status) {
      case CheckStatus::Verified:
        ++report.counts.verified;
        if (!r.in_region) ++report.verified_outside_region;
        break;
      case CheckStatus::Failed:
        ++report.counts.failed;
        if (report.witnesses.size() < GridReport::kMaxWitnesses) report.witnesses.push_back(std::move(r));
        break;
      case CheckStatus::SkippedPole: ++report.counts.skipped_pole; break;
      case CheckStatus::SkippedPrecondition: ++report.counts.skipped_precondition; break;
    }
  }
  return report;
}

}  // namespace combid
