#include "sml/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace sml::report {

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CheckRecord& Report::add(const std::string& name, json params, double residual,
                         double tolerance, double wall_seconds) {
  checks.push_back(CheckRecord{name, std::move(params), residual, tolerance,
                               residual <= tolerance, wall_seconds, ""});
  return checks.back();
}

double round15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

namespace {

// round every float in a json tree to 15 significant digits
json rounded(const json& j) {
  if (j.is_number_float()) return round15(j.get<double>());
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = rounded(it.value());
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(rounded(v));
    return out;
  }
  return j;
}

}  // namespace

json to_json(const Report& r, bool with_timings) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"name", c.name},
            {"params", rounded(c.params)},
            {"residual", round15(c.residual)},
            {"tolerance", round15(c.tolerance)},
            {"pass", c.pass}};
    if (!c.note.empty()) jc["note"] = c.note;
    if (with_timings) jc["wall_seconds"] = round15(c.wall_seconds);
    checks.push_back(jc);
  }
  return json{{"schema", 1},
              {"suite", r.suite},
              {"config", rounded(r.config)},
              {"pass", r.pass()},
              {"checks", checks}};
}

std::string serialize(const Report& r, bool with_timings) {
  return to_json(r, with_timings).dump(2) + "\n";
}

}  // namespace sml::report
