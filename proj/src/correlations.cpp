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

#include "hbtdicke/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "hbtdicke/combinatorics.hpp"
#include "hbtdicke/field.hpp"

namespace hbtdicke {

namespace {

void check_order(int n_emitters, int m, const char* who) {
  if (m < 1 || m > n_emitters) {
    throw std::out_of_range(std::string(who) + ": order m=" + std::to_string(m) +
                            " outside [1, N=" + std::to_string(n_emitters) + "]");
  }
}

}  // namespace

double g_m_exact(const EmitterGeometry& geometry, const DetectorList& detectors,
                 const StateVector& state) {
  if (geometry.n_emitters() > kMaxExactEmitters) {
    throw std::invalid_argument("g_m_exact: N exceeds the exact-engine cap of " +
                                std::to_string(kMaxExactEmitters));
  }
  if (!state.is_normalized()) throw std::invalid_argument("g_m_exact: state is not normalized");
  if (detectors.order() > state.max_excitations()) return 0.0;

  StateVector image = state;
  for (double theta : detectors.angles()) image = apply_field(geometry, theta, image);
  return image.norm_squared();
}

double path_count(int n_emitters, int m) { return combinatorics::falling_factorial(n_emitters, m); }

double g_m_pathsum(const EmitterGeometry& geometry, const DetectorList& detectors,
                   double path_budget) {
  const int n = geometry.n_emitters();
  const int m = detectors.order();
  if (m > n) {
    throw std::out_of_range("g_m_pathsum: m=" + std::to_string(m) + " exceeds N=" + std::to_string(n));
  }
  if (path_count(n, m) > path_budget) {
    throw PathBudgetExceeded("g_m_pathsum: C(N,m)*m! = " + std::to_string(path_count(n, m)) +
                             " exceeds the path budget");
  }

  // factor[l][j] = e^{-i phase(l+1, theta_j)}
  std::vector<std::vector<Complex>> factor(n, std::vector<Complex>(m));
  for (int l = 0; l < n; ++l) {
    for (int j = 0; j < m; ++j) factor[l][j] = std::polar(1.0, -geometry.phase(l + 1, detectors[j]));
  }

  std::vector<int> subset(m);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<int> perm(m);
  double total = 0.0;
  while (true) {
    std::iota(perm.begin(), perm.end(), 0);
    Complex amplitude{};
    do {
      Complex path{1.0, 0.0};
      for (int j = 0; j < m; ++j) path *= factor[subset[perm[j]]][j];
      amplitude += path;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += std::norm(amplitude);

    // next m-subset in lexicographic order
    int i = m - 1;
    while (i >= 0 && subset[i] == n - m + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int k = i + 1; k < m; ++k) subset[k] = subset[k - 1] + 1;
  }
  return total;
}

double array_factor(int n_emitters, double x) {
  const double s = std::sin(0.5 * x);
  if (std::abs(s) < kArrayFactorSingularity) {
    return static_cast<double>(n_emitters) * n_emitters;
  }
  const double r = std::sin(0.5 * n_emitters * x) / s;
  return r * r;
}

double g_m_closed_coincident(int n_emitters, int m, double x) {
  check_order(n_emitters, m, "g_m_closed_coincident");
  if (n_emitters == 1) return 1.0;
  const double n = n_emitters;
  const double prefactor =
      combinatorics::falling_factorial(n_emitters, m) * combinatorics::factorial(m - 1);
  return prefactor * ((n - m) / (n - 1.0) + (m - 1.0) / (n * (n - 1.0)) * array_factor(n_emitters, x));
}

double g2_two_atom_normalized(double x) { return 0.5 * (1.0 + std::cos(x)); }

double g2_thermal_reference(double gamma_mod) {
  if (!(gamma_mod >= 0.0 && gamma_mod <= 1.0)) {
    throw std::out_of_range("g2_thermal_reference: |gamma| must lie in [0, 1]");
  }
  return 1.0 + gamma_mod * gamma_mod;
}

double visibility_formula(int n_emitters, int m) {
  if (n_emitters < 2) throw std::out_of_range("visibility_formula: need N >= 2");
  check_order(n_emitters, m, "visibility_formula");
  return (m - 1.0) / (m + 1.0 - 2.0 * m / n_emitters);
}

double peak_width_estimate(int n_emitters, double kd) {
  if (n_emitters < 2 || !(kd > 0.0)) {
    throw std::out_of_range("peak_width_estimate: need N >= 2 and kd > 0");
  }
  return 2.0 * std::numbers::pi / (n_emitters * kd);
}

double angular_average_gm(int n_emitters, int m) {
  check_order(n_emitters, m, "angular_average_gm");
  const double f = combinatorics::factorial(m - 1);
  return f * f * combinatorics::binomial(n_emitters, m - 1) * (n_emitters - m + 1.0);
}

}  // namespace hbtdicke
