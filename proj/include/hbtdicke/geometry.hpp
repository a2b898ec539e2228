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

#include <cstddef>
#include <span>
#include <vector>

namespace hbtdicke {

/// Largest emitter count the dense state-vector engine accepts (2^20 amplitudes).
inline constexpr int kMaxExactEmitters = 20;

/**
 * N identical emitters on an equally spaced linear chain.
 *
 * Emitter l (1-based) sits at position index l. A photon emitted by emitter l
 * and recorded by a far-field detector at angle theta picks up the optical
 * phase l * kd * sin(theta), with kd the dimensionless product of wavenumber
 * and spacing.
 */
class EmitterGeometry {
 public:
  EmitterGeometry(int n_emitters, double kd);

  int n_emitters() const { return n_emitters_; }
  double kd() const { return kd_; }

  /// Optical phase of emitter `emitter` (1-based) toward detector angle `theta`.
  double phase(int emitter, double theta) const;

  /// Phase difference x = phase(1, theta1) - phase(1, theta2) between two detectors.
  double detector_phase_difference(double theta1, double theta2) const;

 private:
  int n_emitters_;
  double kd_;
};

double phase_of(const EmitterGeometry& geometry, int emitter, double theta);

/// Ordered detector angles (radians). Order never changes a computed G-value.
class DetectorList {
 public:
  explicit DetectorList(std::vector<double> angles);

  /// (m-1) detectors at theta1 followed by one detector at theta2.
  static DetectorList coincident(int m, double theta1, double theta2);

  std::size_t size() const { return angles_.size(); }
  int order() const { return static_cast<int>(angles_.size()); }
  std::span<const double> angles() const { return angles_; }
  double operator[](std::size_t j) const { return angles_[j]; }

 private:
  std::vector<double> angles_;
};

}  // namespace hbtdicke
