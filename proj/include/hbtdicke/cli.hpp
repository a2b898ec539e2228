// Copyright 2026 The hbtdicke Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hbtdicke/correlations.hpp"
#include "hbtdicke/scan.hpp"

namespace hbtdicke::cli {

inline constexpr const char* kToolName = "hbtdicke";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kIoError = 3,
};

enum class Format { kCsv, kJson };

struct RunConfig {
  int n_emitters = 2;
  int order_m = 2;
  double kd = 2.0 * std::numbers::pi;
  double theta1_rad = 0.0;
  double theta2_min = -std::numbers::pi / 2;
  double theta2_max = std::numbers::pi / 2;
  int theta2_steps = 181;
  Method method = Method::kClosed;
  /// Optional second method evaluated on the same grid; its max relative deviation is reported.
  std::optional<Method> compare;
  Format format = Format::kCsv;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
  double path_budget = kDefaultPathBudget;

  bool verify = false;
  int verify_samples = 100;
  bool inject_fault = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Range and compatibility checks shared by scan and verify. Throws ConfigError.
void validate(const RunConfig& config);

/// Evenly spaced theta2 grid from the config (endpoints included).
std::vector<double> theta2_grid(const RunConfig& config);

/// Scan + summary, written to `out` in the configured format. Returns an ExitCode.
int run_scan(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Invariant suites for 2 <= N <= n_emitters. Prints one line per suite.
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Output goes to --out or `out`.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hbtdicke::cli
