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

#include "hbtdicke/geometry.hpp"
#include "hbtdicke/state_vector.hpp"

namespace hbtdicke {

/**
 * Dimensionless positive-frequency far-field operator applied to a state:
 *
 *   E+(theta)|psi> = sum_l e^{-i phase(l, theta)} s-^(l) |psi>
 *
 * The result is unnormalized; its squared norm is the detection weight and
 * the zero vector signals a detection that cannot happen.
 */
StateVector apply_field(const EmitterGeometry& geometry, double theta, const StateVector& state);

/// G^(1)(theta) = || E+(theta)|psi> ||^2 for a normalized state. Throws on unnormalized input.
double intensity(const EmitterGeometry& geometry, double theta, const StateVector& state);

}  // namespace hbtdicke
