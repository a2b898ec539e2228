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

#include "hbtdicke/field.hpp"

#include <stdexcept>
#include <vector>

namespace hbtdicke {

StateVector apply_field(const EmitterGeometry& geometry, double theta, const StateVector& state) {
  const int n = state.n_emitters();
  if (n != geometry.n_emitters()) {
    throw std::invalid_argument("apply_field: state and geometry disagree on emitter count");
  }
  std::vector<Complex> factor(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) factor[l] = std::polar(1.0, -geometry.phase(l + 1, theta));

  const auto in = state.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::uint64_t i = 0; i < in.size(); ++i) {
    const Complex a = in[i];
    if (a == Complex{}) continue;
    for (int l = 0; l < n; ++l) {
      const std::uint64_t bit = std::uint64_t{1} << l;
      if (i & bit) out[i ^ bit] += factor[l] * a;
    }
  }
  return StateVector(n, std::move(out));
}

double intensity(const EmitterGeometry& geometry, double theta, const StateVector& state) {
  if (!state.is_normalized()) {
    throw std::invalid_argument("intensity: state is not normalized");
  }
  return apply_field(geometry, theta, state).norm_squared();
}

}  // namespace hbtdicke
