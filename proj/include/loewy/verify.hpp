#pragma once

// Invariant suite run by `loewy_lab verify`.  Each check names its module and
// invariant; a failing check keeps the first counterexample it met.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "loewy/block.hpp"

namespace loewy {

struct CheckResult {
  std::string module;
  std::string invariant;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;
};

struct VerifyOptions {
  std::uint32_t seed = 20240611;
  std::size_t samples = 30;  // random weights per sampled check
  int coord_bound = 6;       // |coordinate| bound for random weights
};

struct VerifyReport {
  int n = 0;
  long p = 0;
  std::vector<CheckResult> checks;
  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool ok() const { return failed_count() == 0; }
};

VerifyReport run_verification(const BlockContext& ctx, const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyReport& report);

/// Translations reachable from nu by at most `radius` steps of +-eps_k.
std::vector<Weight> eps_ball(const Weight& nu, int radius);

}  // namespace loewy
