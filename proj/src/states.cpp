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

#include "hbtdicke/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hbtdicke {

StateVector fully_excited(int n_emitters) {
  if (n_emitters < 1) throw std::invalid_argument("fully_excited: need at least one emitter");
  return StateVector::basis(n_emitters, (std::uint64_t{1} << n_emitters) - 1);
}

StateVector two_atom_delta_state(double delta) {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Complex> amps(4);
  amps[0b01] = h;                          // |e,g>: emitter 1 excited
  amps[0b10] = std::polar(h, delta);       // |g,e>
  return StateVector(2, std::move(amps));
}

StateVector dicke_state(int n_emitters, int n_ground) {
  if (n_ground < 0 || n_ground > n_emitters) {
    throw std::out_of_range("dicke_state: n_ground " + std::to_string(n_ground) + " outside [0, " +
                            std::to_string(n_emitters) + "]");
  }
  StateVector z = StateVector::zero(n_emitters);
  std::vector<Complex> amps(z.dimension());
  const int excited = n_emitters - n_ground;
  std::size_t count = 0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (std::popcount(i) == excited) ++count;
  }
  const double a = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (std::popcount(i) == excited) amps[i] = a;
  }
  return StateVector(n_emitters, std::move(amps));
}

StateVector timed_dicke_state(const EmitterGeometry& geometry, double theta1) {
  const int n = geometry.n_emitters();
  StateVector z = StateVector::zero(n);
  std::vector<Complex> amps(z.dimension());
  const std::uint64_t full = amps.size() - 1;
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int l = 1; l <= n; ++l) {
    amps[full ^ (std::uint64_t{1} << (l - 1))] = std::polar(a, -geometry.phase(l, theta1));
  }
  return StateVector(n, std::move(amps));
}

}  // namespace hbtdicke
