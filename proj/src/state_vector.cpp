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

#include "hbtdicke/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hbtdicke/geometry.hpp"

namespace hbtdicke {

namespace {

void check_emitter_count(int n_emitters) {
  if (n_emitters < 1 || n_emitters > kMaxExactEmitters) {
    throw std::invalid_argument("StateVector: emitter count " + std::to_string(n_emitters) +
                                " outside [1, " + std::to_string(kMaxExactEmitters) + "]");
  }
}

}  // namespace

StateVector::StateVector(int n_emitters, std::vector<Complex> amplitudes)
    : n_emitters_(n_emitters), amplitudes_(std::move(amplitudes)) {
  check_emitter_count(n_emitters);
  if (amplitudes_.size() != (std::size_t{1} << n_emitters)) {
    throw std::invalid_argument("StateVector: expected 2^" + std::to_string(n_emitters) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
}

StateVector StateVector::zero(int n_emitters) {
  check_emitter_count(n_emitters);
  return StateVector(n_emitters, std::vector<Complex>(std::size_t{1} << n_emitters));
}

StateVector StateVector::basis(int n_emitters, std::uint64_t index) {
  check_emitter_count(n_emitters);
  std::vector<Complex> amps(std::size_t{1} << n_emitters);
  if (index >= amps.size()) {
    throw std::out_of_range("StateVector::basis: index out of range");
  }
  amps[index] = 1.0;
  return StateVector(n_emitters, std::move(amps));
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

bool StateVector::is_normalized() const { return std::abs(norm_squared() - 1.0) <= kNormTolerance; }

int StateVector::max_excitations() const {
  int best = -1;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (amplitudes_[i] != Complex{}) best = std::max(best, std::popcount(i));
  }
  return best;
}

StateVector StateVector::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw std::domain_error("StateVector::normalized: zero vector");
  const double scale = 1.0 / std::sqrt(n2);
  std::vector<Complex> amps(amplitudes_);
  for (Complex& a : amps) a *= scale;
  return StateVector(n_emitters_, std::move(amps));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_emitters() != b.n_emitters()) {
    throw std::invalid_argument("inner_product: emitter counts differ");
  }
  Complex sum{};
  const auto lhs = a.amplitudes();
  const auto rhs = b.amplitudes();
  for (std::size_t i = 0; i < lhs.size(); ++i) sum += std::conj(lhs[i]) * rhs[i];
  return sum;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

}  // namespace hbtdicke
