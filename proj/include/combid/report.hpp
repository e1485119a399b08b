#pragma once

// Structured (JSON) and human-readable verification reports. Reports carry
// no timestamps or thread counts, so identical runs give identical bytes.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "combid/catalog.hpp"

namespace combid {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

inline Json binding_json(const ParamBinding& b) {
  Json j = Json::object();
  for (const auto& [k, v] : b) j[k] = to_string(v);
  return j;
}

inline Json counts_json(const GridCounts& c) {
  return Json{{"verified", c.verified},
              {"failed", c.failed},
              {"skipped_pole", c.skipped_pole},
              {"skipped_precondition", c.skipped_precondition}};
}

inline Json entry_json(const GridReport& r, const std::string& name = {}) {
  Json j;
  j["id"] = r.id;
  if (!name.empty()) j["name"] = name;
  j["anchor"] = r.anchor;
  j["counts"] = counts_json(r.counts);
  j["verified_outside_region"] = r.verified_outside_region;
  Json w = Json::array();
  for (const auto& c : r.witnesses)
    w.push_back(Json{{"binding", binding_json(c.binding)},
                     {"status", std::string(status_name(c.status))},
                     {"detail", c.witness}});
  j["witnesses"] = std::move(w);
  return j;
}

struct RunMeta {
  std::string command;
  std::vector<std::string> selection;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
};

inline Json report_json(const RunMeta& meta, const std::vector<std::pair<GridReport, std::string>>& entries) {
  Json m;
  m["tool"] = "combid";
  m["version"] = kVersion;
  m["command"] = meta.command;
  m["selection"] = meta.selection;
  Json ov = Json::object();
  for (const auto& [k, v] : meta.overrides) ov[k] = v;
  m["grid_overrides"] = std::move(ov);
  m["sample"] = meta.sample;
  m["seed"] = meta.seed;
  GridCounts total;
  Json list = Json::array();
  for (const auto& [r, name] : entries) {
    list.push_back(entry_json(r, name));
    total.verified += r.counts.verified;
    total.failed += r.counts.failed;
    total.skipped_pole += r.counts.skipped_pole;
    total.skipped_precondition += r.counts.skipped_precondition;
  }
  m["totals"] = counts_json(total);
  return Json{{"run_meta", std::move(m)}, {"entries", std::move(list)}};
}

inline void print_human(std::ostream& out, const GridReport& r, const std::string& name) {
  const auto& c = r.counts;
  out << std::left << std::setw(6) << r.id << ' ' << std::setw(28) << name << ' ' << (c.failed ? "FAIL" : "ok  ")
      << "  verified=" << c.verified << " failed=" << c.failed << " pole=" << c.skipped_pole
      << " precondition=" << c.skipped_precondition;
  if (r.verified_outside_region) out << " outside_region=" << r.verified_outside_region;
  out << "  [" << r.anchor << "]\n";
  for (const auto& w : r.witnesses) out << "    witness " << binding_str(w.binding) << ": " << w.witness << '\n';
}

}  // namespace combid
