#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace sml::report {

using json = nlohmann::json;

// One verification check: a named residual against a pinned tolerance.
struct CheckRecord {
  std::string name;
  json params;  // object of parameter values
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_seconds = 0.0;
  std::string note;  // optional free-form outcome (e.g. an adjudication result)
};

struct Report {
  std::string suite;
  json config;  // echo of the run configuration
  std::vector<CheckRecord> checks;

  bool pass() const;
  CheckRecord& add(const std::string& name, json params, double residual, double tolerance,
                   double wall_seconds = 0.0);
};

// Doubles rounded to 15 significant digits before serialization so identical
// configurations reproduce byte-identical output. Wall times are left out
// unless requested; they would defeat that.
double round15(double x);
json to_json(const Report& r, bool with_timings = false);
std::string serialize(const Report& r, bool with_timings = false);

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace sml::report
