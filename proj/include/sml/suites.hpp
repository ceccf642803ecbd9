#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sml/report.hpp"

namespace sml::suites {

// Shared knobs for the verification suites. Tolerances that come from the
// acceptance contract are pinned inside the suites; `tol` only feeds checks
// documented as using the default tolerance.
struct SuiteConfig {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 0;  // 0 = suite default
  std::optional<int> N;
  std::optional<int> L;
  double kprime = 0.8;
  int window = 4;
};

report::Report weyl_core(const SuiteConfig& cfg = {});
report::Report chiral_potts(const SuiteConfig& cfg = {});
report::Report superintegrable_onsager(const SuiteConfig& cfg = {});
report::Report fk_bethe(const SuiteConfig& cfg = {});
report::Report n2_characters(const SuiteConfig& cfg = {});
report::Report orbifold_euler(const SuiteConfig& cfg = {});

std::vector<std::string> suite_names();
report::Report run_suite(const std::string& module, const SuiteConfig& cfg);

}  // namespace sml::suites
