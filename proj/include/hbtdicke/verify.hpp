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
#include <string>
#include <vector>

namespace hbtdicke {

struct VerifyOptions {
  int n_min = 2;
  int n_max = 8;
  /// Random detector tuples per (N, m).
  int samples = 100;
  std::uint64_t seed = 1;
  double kd = 2.0 * std::numbers::pi;
  double tolerance = 1e-9;
  /// Harness self-test: conjugates the phase of the last detector in the exact route.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t checks = 0;
  /// Location of the largest deviation, e.g. "N=4 m=3 angles=[...]".
  std::string worst_case;

  bool passed() const { return max_deviation <= tolerance; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool passed() const;
};

/**
 * Runs the invariant suites over every N in [n_min, n_max] and 1 <= m <= N:
 *
 *   exact-vs-pathsum      random (non-coincident) detector tuples
 *   exact-vs-closed       (m-1) coincident detectors
 *   exact-vs-functional   (m-1) coincident detectors, coefficient readout
 *   factorization         G^(m) == G^(1)(projected) * G^(m-1)
 *   dicke-preparation     cascade at theta1 = 0 vs the symmetric Dicke state
 *   functional-structure  Hermiticity, unit constant term, term-count bound
 *
 * Deviations are relative with an absolute floor (see relative_deviation).
 */
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace hbtdicke
