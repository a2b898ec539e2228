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

#include <array>
#include <cstdint>
#include <map>
#include <span>

#include "hbtdicke/geometry.hpp"
#include "hbtdicke/state_vector.hpp"

namespace hbtdicke {

/// Maximum number of distinct detector variables in a FormalPolynomial.
inline constexpr int kMaxFunctionalVars = 4;

/// Guard on the number of terms a product expansion may produce.
inline constexpr double kMaxFunctionalTerms = 4e6;

/// Coefficients accumulate in extended precision: the expansion cancels terms
/// much larger than the coefficients read off near interference zeros.
using Coefficient = std::complex<long double>;

/// Exponents of f_1..f_K followed by those of f*_1..f*_K. Unused slots stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxFunctionalVars> f{};
  std::array<std::uint8_t, kMaxFunctionalVars> f_conj{};

  int degree() const;
  /// Same monomial with f and f* exponents exchanged.
  Monomial conjugate() const;

  auto operator<=>(const Monomial&) const = default;
};

/**
 * Polynomial in formal detector variables f_l and their conjugates f*_l with
 * complex coefficients. Terms are kept in a sorted map so iteration order,
 * and therefore every floating-point accumulation, is deterministic.
 */
class FormalPolynomial {
 public:
  explicit FormalPolynomial(int n_vars);

  static FormalPolynomial constant(int n_vars, Coefficient value);

  int n_vars() const { return n_vars_; }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Coefficient>& terms() const { return terms_; }

  /// Coefficient of a monomial (0 when absent).
  Coefficient coefficient(const Monomial& monomial) const;
  Coefficient constant_term() const { return coefficient(Monomial{}); }
  int total_degree() const;

  void add_term(const Monomial& monomial, Coefficient coefficient);

  FormalPolynomial operator*(const FormalPolynomial& other) const;

 private:
  int n_vars_;
  std::map<Monomial, Coefficient> terms_;
};

/**
 * Characteristic functional of the fully excited N-emitter state over K
 * distinct detector angles, expanded exactly:
 *
 *   C = prod_j (1 - |beta_j|^2),   beta_j = sum_l c_{l,j} f_l,
 *   c_{l,j} = e^{-i phase(j, angle_l)}.
 */
FormalPolynomial build_functional(const EmitterGeometry& geometry,
                                  std::span<const double> distinct_angles);

/**
 * G^(m) with detector l repeated multiplicities[l] times, read off the
 * functional:
 *
 *   G = (-1)^m (prod_l mult_l!)^2 [coefficient of prod_l f_l^mult_l f*_l^mult_l]
 *
 * Returns 0 when m exceeds N (the coefficient is absent). Throws
 * std::logic_error if the extracted value is not real and nonnegative.
 */
double extract_gm(const FormalPolynomial& functional, std::span<const int> multiplicities);

/// Number of monomials the product expansion can produce: sum_{k=0}^{N} C(k+K-1, K-1)^2.
double max_term_count(int n_emitters, int n_vars);

}  // namespace hbtdicke
