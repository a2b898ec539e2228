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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbtdicke/correlations.hpp"
#include "hbtdicke/geometry.hpp"

namespace hbtdicke {

enum class Method { kExact, kPathSum, kClosed, kFunctional };

std::string_view to_string(Method method);
/// Accepts "exact", "pathsum", "closed", "functional".
std::optional<Method> parse_method(std::string_view name);

/// G^(m)(theta1 x (m-1), theta2) sampled over a theta2 grid.
struct CorrelationCurve {
  std::vector<double> theta2_grid;
  /// Detector phase difference x = phase(1, theta1) - phase(1, theta2) per grid point.
  std::vector<double> phase_x;
  /// Rounding negatives (down to -1e-9) are clamped to zero here.
  std::vector<double> values;
  Method method = Method::kExact;
  int n_emitters = 0;
  int order_m = 0;
  double theta1 = 0.0;
  double kd = 0.0;
};

struct CurveSummary {
  double visibility = 0.0;
  double peak_value = 0.0;
  /// Phase distance from the peak to the first local minimum; NaN for a flat curve.
  double first_zero_phase = 0.0;
  /// Trapezoid average over the scanned phase range.
  double angular_mean = 0.0;
};

struct ScanOptions {
  double path_budget = kDefaultPathBudget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Evaluates each grid point independently with the chosen method. The grid
/// must be non-empty and strictly increasing.
CorrelationCurve scan_curve(const EmitterGeometry& geometry, int m, double theta1,
                            std::span<const double> theta2_grid, Method method,
                            const ScanOptions& options = {});

CurveSummary summarize(const CorrelationCurve& curve);

/// max_i |a_i - b_i| / max(|a_i|, |b_i|) with an absolute floor near zero.
double max_relative_deviation(const CorrelationCurve& a, const CorrelationCurve& b);

}  // namespace hbtdicke
