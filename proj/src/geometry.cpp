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

#include "hbtdicke/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hbtdicke {

EmitterGeometry::EmitterGeometry(int n_emitters, double kd) : n_emitters_(n_emitters), kd_(kd) {
  if (n_emitters < 1) {
    throw std::invalid_argument("EmitterGeometry: need at least one emitter, got " +
                                std::to_string(n_emitters));
  }
  if (!(kd > 0.0) || !std::isfinite(kd)) {
    throw std::invalid_argument("EmitterGeometry: kd must be positive and finite");
  }
}

double EmitterGeometry::phase(int emitter, double theta) const {
  if (emitter < 1 || emitter > n_emitters_) {
    throw std::out_of_range("EmitterGeometry::phase: emitter " + std::to_string(emitter) +
                            " outside [1, " + std::to_string(n_emitters_) + "]");
  }
  return static_cast<double>(emitter) * kd_ * std::sin(theta);
}

double EmitterGeometry::detector_phase_difference(double theta1, double theta2) const {
  return kd_ * (std::sin(theta1) - std::sin(theta2));
}

double phase_of(const EmitterGeometry& geometry, int emitter, double theta) {
  return geometry.phase(emitter, theta);
}

DetectorList::DetectorList(std::vector<double> angles) : angles_(std::move(angles)) {
  if (angles_.empty()) {
    throw std::invalid_argument("DetectorList: at least one detector is required");
  }
  for (double a : angles_) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("DetectorList: detector angles must be finite");
    }
  }
}

DetectorList DetectorList::coincident(int m, double theta1, double theta2) {
  if (m < 1) {
    throw std::invalid_argument("DetectorList::coincident: order must be >= 1");
  }
  std::vector<double> angles(static_cast<std::size_t>(m - 1), theta1);
  angles.push_back(theta2);
  return DetectorList(std::move(angles));
}

}  // namespace hbtdicke
