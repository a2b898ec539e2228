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
#include <stdexcept>

#include "hbtdicke/geometry.hpp"
#include "hbtdicke/state_vector.hpp"

namespace hbtdicke {

/// Detection weights at or below this value are treated as impossible detections.
inline constexpr double kImpossibleWeight = 1e-24;

class ImpossibleDetection : public std::runtime_error {
 public:
  ImpossibleDetection(const std::string& what, double weight)
      : std::runtime_error(what), weight_(weight) {}
  double weight() const { return weight_; }

 private:
  double weight_;
};

/**
 * Outcome of conditioning a state on photon detections.
 *
 * `weight` is the squared norm of the field image before renormalization,
 * i.e. the G-value of the detections. A zero weight means the detection
 * cannot occur; the projected state is then absent.
 */
struct ProjectionResult {
  std::optional<StateVector> projected_state;
  double weight = 0.0;

  bool possible() const { return projected_state.has_value(); }
  /// Projected state; throws ImpossibleDetection if the detection cannot occur.
  const StateVector& state() const;
};

/// Condition on one photon recorded at theta: E+(theta)|psi> / norm.
ProjectionResult photon_subtract(const EmitterGeometry& geometry, double theta,
                                 const StateVector& state);

/// `count` successive detections at theta1. The weight is the product of
/// stage weights, G^(count)(theta1, ..., theta1).
ProjectionResult cascade_subtract(const EmitterGeometry& geometry, double theta1, int count,
                                  const StateVector& state);

/// Two-atom conditional correlation G^(2)(theta2, theta1) / G^(1)(theta2) for |e,e>,
/// i.e. the intensity at theta1_probe of the state projected by a detection at theta2.
double conditional_g2(const EmitterGeometry& geometry, double theta2, double theta1_probe);

struct FactorizationReport {
  /// G^(m) of the fully excited state at (theta1 x (m-1), theta2).
  double direct = 0.0;
  /// G^(1) at theta2 of the (m-1)-fold projected state times G^(m-1)(theta1 x (m-1)).
  double projected = 0.0;
  /// Dicke-state intensity at theta2 times C(N,m-1)((m-1)!)^2; only when theta1 == 0.
  std::optional<double> dicke;
  double max_deviation = 0.0;
};

/// Evaluates the conditional-detection factorization by independent routes.
/// Throws ImpossibleDetection if the (m-1)-fold projection has zero weight.
FactorizationReport verify_factorization(const EmitterGeometry& geometry, int m, double theta1,
                                         double theta2);

/// Intensity of the symmetric Dicke state with (m-1) de-excitations:
/// (N-m+1) [ (N-m)/(N-1) + (m-1)/(N(N-1)) sin^2(N phi/2)/sin^2(phi/2) ].
double dicke_intensity_closed(int n_emitters, int m, double phi);

/// |a-b| / max(|a|, |b|, 1e-3): relative deviation that turns absolute below 1e-3,
/// so a 1e-9 threshold means relative 1e-9 away from zero and absolute 1e-12 near it.
double relative_deviation(double a, double b);

}  // namespace hbtdicke
