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

#include "hbtdicke/projection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hbtdicke/combinatorics.hpp"
#include "hbtdicke/correlations.hpp"
#include "hbtdicke/field.hpp"
#include "hbtdicke/states.hpp"

namespace hbtdicke {

const StateVector& ProjectionResult::state() const {
  if (!projected_state) {
    throw ImpossibleDetection("projection: detection is impossible (zero weight)", weight);
  }
  return *projected_state;
}

ProjectionResult photon_subtract(const EmitterGeometry& geometry, double theta,
                                 const StateVector& state) {
  if (!state.is_normalized()) throw std::invalid_argument("photon_subtract: state is not normalized");
  StateVector image = apply_field(geometry, theta, state);
  const double weight = image.norm_squared();
  if (weight <= kImpossibleWeight) return ProjectionResult{std::nullopt, 0.0};
  return ProjectionResult{image.normalized(), weight};
}

ProjectionResult cascade_subtract(const EmitterGeometry& geometry, double theta1, int count,
                                  const StateVector& state) {
  if (count < 0) throw std::invalid_argument("cascade_subtract: count must be nonnegative");
  if (!state.is_normalized()) throw std::invalid_argument("cascade_subtract: state is not normalized");
  ProjectionResult acc{state, 1.0};
  for (int i = 0; i < count; ++i) {
    ProjectionResult step = photon_subtract(geometry, theta1, *acc.projected_state);
    if (!step.possible()) return step;
    acc.projected_state = std::move(step.projected_state);
    acc.weight *= step.weight;
  }
  return acc;
}

double conditional_g2(const EmitterGeometry& geometry, double theta2, double theta1_probe) {
  if (geometry.n_emitters() != 2) {
    throw std::invalid_argument("conditional_g2: defined for the two-atom system only");
  }
  ProjectionResult r = photon_subtract(geometry, theta2, fully_excited(2));
  return intensity(geometry, theta1_probe, r.state());
}

double relative_deviation(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-3});
}

FactorizationReport verify_factorization(const EmitterGeometry& geometry, int m, double theta1,
                                         double theta2) {
  const int n = geometry.n_emitters();
  if (m < 1 || m > n) {
    throw std::out_of_range("verify_factorization: order m=" + std::to_string(m) + " outside [1, N]");
  }
  const StateVector phi = fully_excited(n);
  FactorizationReport report;
  report.direct = g_m_exact(geometry, DetectorList::coincident(m, theta1, theta2), phi);

  ProjectionResult prepared = cascade_subtract(geometry, theta1, m - 1, phi);
  report.projected = intensity(geometry, theta2, prepared.state()) * prepared.weight;

  report.max_deviation = relative_deviation(report.direct, report.projected);
  if (theta1 == 0.0) {
    const double f = combinatorics::factorial(m - 1);
    const double norm = combinatorics::binomial(n, m - 1) * f * f;
    report.dicke = intensity(geometry, theta2, dicke_state(n, m - 1)) * norm;
    report.max_deviation = std::max({report.max_deviation, relative_deviation(report.direct, *report.dicke),
                                     relative_deviation(report.projected, *report.dicke)});
  }
  return report;
}

double dicke_intensity_closed(int n_emitters, int m, double phi) {
  if (m < 1 || m > n_emitters) {
    throw std::out_of_range("dicke_intensity_closed: order m=" + std::to_string(m) + " outside [1, N]");
  }
  if (n_emitters == 1) return 1.0;
  const double n = n_emitters;
  return (n - m + 1.0) * ((n - m) / (n - 1.0) + (m - 1.0) / (n * (n - 1.0)) * array_factor(n_emitters, phi));
}

}  // namespace hbtdicke
