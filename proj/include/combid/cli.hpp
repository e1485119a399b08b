#pragma once

// Command-line front end. Exit codes: 0 all verified, 1 some binding
// failed, 2 usage, parse or shape error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "combid/catalog.hpp"
#include "combid/report.hpp"
#include "combid/schemes.hpp"

namespace combid {

namespace cli {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct GridOptions {
  std::vector<std::pair<std::string, std::string>> overrides;  // name -> value list
  std::string grid;                                            // full replacement
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

inline GridSpec apply_overrides(GridSpec g, const GridOptions& opt) {
  if (!opt.grid.empty()) g = parse_grid(opt.grid);
  for (const auto& [name, values] : opt.overrides) g.set(name, parse_value_list(values));
  return g;
}

inline GridReport run_grid(const IdentityDescriptor& d, const GridSpec& g, const std::string& id,
                           const GridOptions& opt) {
  auto bindings = expand_grid(d, g);
  if (opt.sample) bindings = sample_bindings(bindings, opt.sample, opt.seed);
  return verify_bindings(d, bindings, id, opt.threads);
}

// Default grid for an identity without one (derived or read from a file).
inline GridSpec generic_grid(const IdentityDescriptor& d, std::string_view scheme) {
  GridSpec g;
  for (const auto& p : d.params) {
    std::string values;
    if (p.name == "m") values = "0..4";
    else if (p.kind == ParamKind::Nat) values = "0..8";
    else if (p.name == "s") values = scheme == "frisch" ? "1..4" : "0..3";
    else if (p.kind == ParamKind::Int) values = "0..3";
    else if (p.name == "r") values = scheme == "klamkin" ? "0..14,23/2" : "1..6,7/2,11/3";
    else if (p.name == "u") values = "-1,0,1,2,1/2,7/3";
    else values = "0..6,1/2,7/3";
    g.set(p.name, parse_value_list(values));
  }
  return g;
}

struct Outcome {
  std::vector<std::pair<GridReport, std::string>> reports;
  bool any_failed() const {
    for (const auto& [r, n] : reports)
      if (r.counts.failed) return true;
    return false;
  }
};

inline int finish(const Outcome& o, const RunMeta& meta, const std::string& out_path, std::ostream& out) {
  GridCounts total;
  for (const auto& [r, name] : o.reports) {
    print_human(out, r, name);
    total.verified += r.counts.verified;
    total.failed += r.counts.failed;
    total.skipped_pole += r.counts.skipped_pole;
    total.skipped_precondition += r.counts.skipped_precondition;
  }
  out << "total: verified=" << total.verified << " failed=" << total.failed << " pole=" << total.skipped_pole
      << " precondition=" << total.skipped_precondition << '\n';
  if (!out_path.empty()) write_file(out_path, report_json(meta, o.reports).dump(2) + "\n");
  return o.any_failed() ? kFailed : kOk;
}

inline void add_grid_flags(CLI::App& cmd, GridOptions& opt) {
  for (const char* p : {"n", "m", "r", "s", "t", "u"}) {
    cmd.add_option_function<std::string>(
        std::string("--") + p, [&opt, p](const std::string& v) { opt.overrides.emplace_back(p, v); },
        std::string("values for parameter ") + p + ", e.g. 0..10 or 1..5,7/2");
  }
  cmd.add_option_function<std::vector<std::string>>(
         "--set",
         [&opt](const std::vector<std::string>& items) {
           for (const auto& item : items) {
             auto eq = item.find('=');
             if (eq == std::string::npos) throw CLI::ValidationError("--set", "expected name=values");
             opt.overrides.emplace_back(item.substr(0, eq), item.substr(eq + 1));
           }
         },
         "values for any parameter, as name=values")
      ->allow_extra_args(false);
  cmd.add_option("--grid", opt.grid, "replace the whole grid, e.g. \"n=0..6; r=1..3 | inregion\"");
  cmd.add_option("--sample", opt.sample, "verify a seeded random subset of this many bindings per entry");
  cmd.add_option("--seed", opt.seed, "seed for --sample");
  cmd.add_option("--threads", opt.threads, "worker threads (0 = automatic; capped by COMBID_THREADS)");
}

inline Outcome derive_and_verify(const std::vector<DerivedIdentity>& derived, const GridOptions& opt,
                                 std::string_view scheme, std::ostream& out) {
  Outcome o;
  for (const auto& d : derived) {
    out << d.dsl() << '\n';
    std::string id = d.provenance.transform;
    for (const auto& [k, v] : d.provenance.args) id += "." + v;
    auto grid = apply_overrides(generic_grid(d.desc, scheme), opt);
    auto r = run_grid(d.desc, grid, id, opt);
    r.anchor = "derived from " + d.provenance.source;
    o.reports.emplace_back(std::move(r), d.provenance.source);
  }
  return o;
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli;
  CLI::App app{"Exact verification and derivation of binomial-sum identities", "combid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // verify
  std::vector<std::string> ids;
  std::string input, out_path;
  GridOptions gopt;
  auto* verify = app.add_subcommand("verify", "verify catalog entries (or a DSL file) on parameter grids");
  verify->add_option("--id", ids, "entry ids or names; 'all' for the whole catalog")->delimiter(',');
  verify->add_option("--input", input, "verify the identity in a DSL file instead");
  verify->add_option("--out", out_path, "write a JSON report to this path");
  add_grid_flags(*verify, gopt);

  // derive
  std::string scheme, direction = "both", variant = "all", entry;
  std::optional<std::int64_t> m_value;
  auto* derive = app.add_subcommand("derive", "apply a derivation scheme and verify the result");
  derive->add_option("--scheme", scheme, "frisch, klamkin or moment")
      ->required()
      ->check(CLI::IsMember({"frisch", "klamkin", "moment"}));
  auto* in_opt = derive->add_option("--input", input, "DSL file with a polynomial identity in x");
  auto* entry_opt = derive->add_option("--entry", entry, "use a catalog entry as input");
  in_opt->excludes(entry_opt);
  derive->add_option("--direction", direction, "forward, transposed or both")
      ->check(CLI::IsMember({"forward", "transposed", "both"}));
  derive->add_option("--variant", variant, "moment variant")
      ->check(CLI::IsMember({"direct", "swapped", "reflected", "swapped_reflected", "all"}));
  derive->add_option("--m", m_value, "fix the moment order");
  derive->add_option("--out", out_path, "write a JSON report to this path");
  for (const char* p : {"n", "r", "s", "t", "u"})
    derive->add_option_function<std::string>(std::string("--") + p,
                                             [&gopt, p](const std::string& v) { gopt.overrides.emplace_back(p, v); },
                                             std::string("verification values for ") + p);
  derive->add_option("--grid", gopt.grid, "replace the verification grid");
  derive->add_option("--threads", gopt.threads, "worker threads");

  // integrals
  std::string a_text, b_text;
  int max_exp = 20;
  unsigned nodes = 64;
  auto* integrals = app.add_subcommand("integrals", "compare exact Beta integrals with quadrature");
  integrals->add_option("--a", a_text, "single exponent of y");
  integrals->add_option("--b", b_text, "single exponent of 1-y");
  integrals->add_option("--max", max_exp, "sweep a, b over 0..max")->check(CLI::Range(0, 60));
  integrals->add_option("--nodes", nodes, "Gauss-Legendre nodes (16, 32, 64 or 128)");

  // export-catalog
  std::string dir;
  auto* exporter = app.add_subcommand("export-catalog", "print or write the catalog as DSL");
  exporter->add_option("--id", ids, "entries to export (default all)")->delimiter(',');
  exporter->add_option("--dir", dir, "write one <id>.dsl file per entry into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*verify) {
      RunMeta meta{"verify", {}, gopt.overrides, gopt.sample, gopt.seed};
      Outcome o;
      if (!input.empty()) {
        if (!ids.empty()) throw Error("--id and --input are mutually exclusive");
        auto d = parse_descriptor(read_file(input));
        auto grid = apply_overrides(generic_grid(d, ""), gopt);
        auto r = run_grid(d, grid, input, gopt);
        r.anchor = "file " + input;
        o.reports.emplace_back(std::move(r), std::filesystem::path(input).stem().string());
        meta.selection = {input};
      } else {
        if (ids.empty()) ids = {"all"};
        std::vector<const CatalogEntry*> chosen;
        for (const auto& id : ids) {
          if (id == "all") {
            for (const auto& e : catalog()) chosen.push_back(&e);
          } else {
            chosen.push_back(&find_entry(id));
          }
        }
        meta.selection = ids;
        for (const auto* e : chosen) {
          GridSpec g = e->default_grid;
          for (const auto& [name, values] : gopt.overrides)
            if (e->desc.param(name)) g.set(name, parse_value_list(values));
          if (!gopt.grid.empty()) g = parse_grid(gopt.grid);
          auto r = run_grid(e->desc, g, e->id, gopt);
          r.anchor = e->anchor;
          o.reports.emplace_back(std::move(r), e->name);
        }
      }
      return finish(o, meta, out_path, out);
    }

    if (*derive) {
      IdentityDescriptor src;
      std::string source;
      if (!entry.empty()) {
        src = find_entry(entry).desc;
        source = find_entry(entry).id;
      } else if (!input.empty()) {
        src = parse_descriptor(read_file(input));
        source = std::filesystem::path(input).filename().string();
      } else {
        throw Error("derive needs --input or --entry");
      }
      std::vector<DerivedIdentity> derived;
      std::vector<Direction> dirs;
      if (direction != "transposed") dirs.push_back(Direction::Forward);
      if (direction != "forward") dirs.push_back(Direction::Transposed);
      if (scheme == "frisch") {
        for (auto d : dirs) derived.push_back(frisch_transform(src, d, {}, source));
      } else if (scheme == "klamkin") {
        for (auto d : dirs) derived.push_back(klamkin_transform(src, d, {}, source));
      } else {
        std::vector<MomentVariant> variants;
        if (variant == "all") {
          variants = {MomentVariant::Direct, MomentVariant::Swapped};
          if (has_moment_shape(src)) {
            variants.push_back(MomentVariant::Reflected);
            variants.push_back(MomentVariant::SwappedReflected);
          } else {
            out << "# reflected variants skipped: input is not sum f(k) x^k == sum g(k) (1-x)^k over 0..N\n";
          }
        } else {
          for (auto v : {MomentVariant::Direct, MomentVariant::Swapped, MomentVariant::Reflected,
                         MomentVariant::SwappedReflected})
            if (variant_name(v) == variant) variants.push_back(v);
        }
        for (auto v : variants) {
          auto d = moment_transform(src, v, {}, source);
          if (m_value) d = bind_params(d, {{"m", Rational(*m_value)}});
          derived.push_back(std::move(d));
        }
      }
      RunMeta meta{"derive", {scheme, source}, gopt.overrides, 0, 0};
      return finish(derive_and_verify(derived, gopt, scheme, out), meta, out_path, out);
    }

    if (*integrals) {
      if (!a_text.empty() || !b_text.empty()) {
        auto a = parse_rational(a_text.empty() ? "0" : a_text), b = parse_rational(b_text.empty() ? "0" : b_text);
        if (!a || !b) throw Error("--a and --b must be rationals");
        BetaArgs args{*a, *b};
        out << "a=" << to_string(*a) << " b=" << to_string(*b) << '\n';
        try {
          auto exact = beta_integral_exact(args);
          out << "exact=" << to_string(exact) << '\n';
        } catch (const NonIntegerExponent& e) {
          out << "exact: skipped (" << e.what() << ")\n";
        }
        try {
          auto estimate = beta_integral_quadrature(args, nodes);
          out << "quadrature=" << estimate.str(30) << '\n';
        } catch (const SingularExponent& e) {
          out << "quadrature: skipped (" << e.what() << ")\n";
        }
        return kOk;
      }
      Float50 max_err = 0;
      std::size_t pairs = 0, packaged = 0, packaged_bad = 0;
      for (int a = 0; a <= max_exp; ++a)
        for (int b = 0; b <= max_exp; ++b) {
          Rational exact = beta_integral_exact({a, b});
          Float50 err = abs(beta_integral_quadrature({a, b}, nodes) - to_float(exact));
          if (err > max_err) max_err = err;
          ++pairs;
        }
      // Packaged forms over integer (r, k, s, n) whose exponents stay in range.
      for (int r = 0; r <= max_exp; ++r)
        for (int k = 0; k <= max_exp; ++k)
          for (int s = 0; s <= max_exp; ++s)
            for (int n = k; n <= std::min(r, max_exp); ++n)
              for (const auto& f : packaged_beta_forms(r, k, s, n)) {
                if (f.args.a > max_exp || f.args.b > max_exp) continue;
                ++packaged;
                if (beta_integral_exact(f.args) != f.value) ++packaged_bad;
              }
      const bool ok = max_err <= Float50("1e-10") && packaged_bad == 0;
      out << "pairs=" << pairs << " nodes=" << nodes << " max_abs_error=" << max_err.str(6, std::ios::scientific)
          << '\n';
      out << "packaged_forms=" << packaged << " mismatches=" << packaged_bad << '\n';
      out << (ok ? "ok" : "FAIL") << '\n';
      return ok ? kOk : kFailed;
    }

    if (*exporter) {
      std::vector<const CatalogEntry*> chosen;
      if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
        for (const auto& e : catalog()) chosen.push_back(&e);
      } else {
        for (const auto& id : ids) chosen.push_back(&find_entry(id));
      }
      if (!dir.empty()) std::filesystem::create_directories(dir);
      for (const auto* e : chosen) {
        std::string text = "# " + e->id + " " + e->name + ": " + e->anchor + "\n# grid: " + e->grid + "\n" +
                           print_descriptor(e->desc);
        if (dir.empty())
          out << text << '\n';
        else
          write_file((std::filesystem::path(dir) / (e->id + ".dsl")).string(), text);
      }
      return kOk;
    }
  } catch (const UnknownEntry& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace combid
