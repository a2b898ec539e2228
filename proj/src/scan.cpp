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

#include "hbtdicke/scan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hbtdicke/field.hpp"
#include "hbtdicke/functional.hpp"
#include "hbtdicke/projection.hpp"
#include "hbtdicke/states.hpp"

namespace hbtdicke {

namespace {

constexpr double kNegativeResidue = 1e-9;

// Runs fn(i) for i in [0, n) over a few threads; each index is written by exactly one worker.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 16)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  workers.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kExact: return "exact";
    case Method::kPathSum: return "pathsum";
    case Method::kClosed: return "closed";
    case Method::kFunctional: return "functional";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kExact, Method::kPathSum, Method::kClosed, Method::kFunctional}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

CorrelationCurve scan_curve(const EmitterGeometry& geometry, int m, double theta1,
                            std::span<const double> theta2_grid, Method method,
                            const ScanOptions& options) {
  const int n = geometry.n_emitters();
  if (theta2_grid.empty()) throw std::invalid_argument("scan_curve: empty theta2 grid");
  for (std::size_t i = 0; i < theta2_grid.size(); ++i) {
    if (!std::isfinite(theta2_grid[i])) throw std::invalid_argument("scan_curve: non-finite grid point");
    if (i > 0 && !(theta2_grid[i] > theta2_grid[i - 1])) {
      throw std::invalid_argument("scan_curve: theta2 grid must be strictly increasing");
    }
  }
  if (m < 1 || m > n) {
    throw std::out_of_range("scan_curve: order m=" + std::to_string(m) + " outside [1, N]");
  }

  CorrelationCurve curve;
  curve.theta2_grid.assign(theta2_grid.begin(), theta2_grid.end());
  curve.method = method;
  curve.n_emitters = n;
  curve.order_m = m;
  curve.theta1 = theta1;
  curve.kd = geometry.kd();
  curve.phase_x.resize(theta2_grid.size());
  for (std::size_t i = 0; i < theta2_grid.size(); ++i) {
    curve.phase_x[i] = geometry.detector_phase_difference(theta1, theta2_grid[i]);
  }

  std::vector<double> raw(theta2_grid.size());
  std::function<double(double)> eval;
  std::optional<StateVector> prefix;
  switch (method) {
    case Method::kExact: {
      if (n > kMaxExactEmitters) {
        throw std::invalid_argument("scan_curve: N exceeds the exact-engine cap");
      }
      // E+(theta1)^(m-1)|Phi_N>, shared read-only across grid points.
      StateVector image = fully_excited(n);
      for (int k = 0; k < m - 1; ++k) image = apply_field(geometry, theta1, image);
      prefix = std::move(image);
      eval = [&](double theta2) { return apply_field(geometry, theta2, *prefix).norm_squared(); };
      break;
    }
    case Method::kPathSum:
      if (path_count(n, m) > options.path_budget) {
        throw PathBudgetExceeded("scan_curve: path sum for N=" + std::to_string(n) + ", m=" +
                                 std::to_string(m) + " exceeds the path budget");
      }
      eval = [&](double theta2) {
        return g_m_pathsum(geometry, DetectorList::coincident(m, theta1, theta2), options.path_budget);
      };
      break;
    case Method::kClosed:
      eval = [&](double theta2) {
        return g_m_closed_coincident(n, m, geometry.detector_phase_difference(theta1, theta2));
      };
      break;
    case Method::kFunctional:
      eval = [&](double theta2) {
        const std::array<double, 2> angles{theta1, theta2};
        const std::array<int, 2> mult{m - 1, 1};
        return extract_gm(build_functional(geometry, angles), mult);
      };
      break;
  }

  parallel_for(raw.size(), options.threads, [&](std::size_t i) { raw[i] = eval(theta2_grid[i]); });

  curve.values.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < -kNegativeResidue) {
      throw std::logic_error("scan_curve: negative correlation " + std::to_string(raw[i]));
    }
    curve.values[i] = std::max(0.0, raw[i]);
  }
  return curve;
}

CurveSummary summarize(const CorrelationCurve& curve) {
  const auto& v = curve.values;
  const auto& x = curve.phase_x;
  if (v.empty() || v.size() != x.size()) throw std::invalid_argument("summarize: malformed curve");

  CurveSummary s;
  const std::size_t peak = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  const double vmax = v[peak];
  const double vmin = *std::min_element(v.begin(), v.end());
  s.peak_value = vmax;
  s.visibility = (vmax + vmin) > 0.0 ? (vmax - vmin) / (vmax + vmin) : 0.0;

  s.first_zero_phase = std::numeric_limits<double>::quiet_NaN();
  if (vmax - vmin > 1e-12 * std::max(1.0, vmax)) {
    auto walk = [&](int dir) -> std::optional<std::size_t> {
      std::size_t i = peak;
      while (true) {
        const std::ptrdiff_t next = static_cast<std::ptrdiff_t>(i) + dir;
        if (next < 0 || next >= static_cast<std::ptrdiff_t>(v.size())) return std::nullopt;
        if (v[next] >= v[i] && i != peak) return i;
        if (v[next] > v[i]) return std::nullopt;
        i = static_cast<std::size_t>(next);
      }
    };
    std::optional<std::size_t> zero = walk(+1);
    if (!zero) zero = walk(-1);
    if (zero) s.first_zero_phase = std::abs(x[*zero] - x[peak]);
  }

  if (v.size() == 1) {
    s.angular_mean = v[0];
  } else {
    double integral = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) integral += 0.5 * (v[i] + v[i - 1]) * (x[i] - x[i - 1]);
    const double span = x.back() - x.front();
    s.angular_mean = span != 0.0 ? integral / span : v[0];
  }
  return s;
}

double max_relative_deviation(const CorrelationCurve& a, const CorrelationCurve& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("max_relative_deviation: curves differ in length");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, relative_deviation(a.values[i], b.values[i]));
  }
  return worst;
}

}  // namespace hbtdicke
