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

/// Uncorrelated product state with every emitter excited.
StateVector fully_excited(int n_emitters);

/// (|e,g> + e^{i delta}|g,e>)/sqrt(2). delta = 0 is symmetric, delta = pi antisymmetric.
StateVector two_atom_delta_state(double delta);

/// Symmetric Dicke state with exactly `n_ground` emitters de-excited, equal weights.
StateVector dicke_state(int n_emitters, int n_ground);

/// Single de-excitation carrying the phase imprint of a detection at theta1:
/// (1/sqrt(N)) sum_l e^{-i phase(l, theta1)} |e..g_l..e>.
StateVector timed_dicke_state(const EmitterGeometry& geometry, double theta1);

}  // namespace hbtdicke
