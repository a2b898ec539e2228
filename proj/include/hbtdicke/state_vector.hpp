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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hbtdicke {

using Complex = std::complex<double>;

/// Tolerance on |<psi|psi> - 1| for a state to count as normalized.
inline constexpr double kNormTolerance = 1e-12;

/**
 * Dense amplitude vector over the 2^N two-level product basis.
 *
 * Basis convention: bit (l-1) of the basis index is set iff emitter l is
 * excited. Index 0 is the all-ground state, index 2^N - 1 the fully excited
 * state. Values are immutable after construction; unnormalized vectors (raw
 * field-operator images) carry their squared norm as a physical weight.
 */
class StateVector {
 public:
  StateVector(int n_emitters, std::vector<Complex> amplitudes);

  /// All-zero vector of the right dimension.
  static StateVector zero(int n_emitters);
  /// Single basis state with unit amplitude.
  static StateVector basis(int n_emitters, std::uint64_t index);

  int n_emitters() const { return n_emitters_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::uint64_t index) const { return amplitudes_[index]; }

  double norm_squared() const;
  bool is_normalized() const;
  /// Largest number of excited emitters among basis states with nonzero amplitude (-1 for the zero vector).
  int max_excitations() const;

  /// Copy rescaled to unit norm. Throws on the zero vector.
  StateVector normalized() const;

  /// Bit pattern of the fully excited basis state.
  std::uint64_t all_excited_index() const { return dimension() - 1; }

 private:
  int n_emitters_;
  std::vector<Complex> amplitudes_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2 for normalized inputs.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace hbtdicke
