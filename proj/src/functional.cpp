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

#include "hbtdicke/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hbtdicke/combinatorics.hpp"

namespace hbtdicke {

namespace {

constexpr int kMaxExponent = std::numeric_limits<std::uint8_t>::max();
constexpr double kImagResidue = 1e-12;

void check_vars(int n_vars) {
  if (n_vars < 1 || n_vars > kMaxFunctionalVars) {
    throw std::out_of_range("FormalPolynomial: number of variables " + std::to_string(n_vars) +
                            " outside [1, " + std::to_string(kMaxFunctionalVars) + "]");
  }
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < kMaxFunctionalVars; ++i) d += f[i] + f_conj[i];
  return d;
}

Monomial Monomial::conjugate() const { return Monomial{f_conj, f}; }

FormalPolynomial::FormalPolynomial(int n_vars) : n_vars_(n_vars) { check_vars(n_vars); }

FormalPolynomial FormalPolynomial::constant(int n_vars, Coefficient value) {
  FormalPolynomial p(n_vars);
  p.add_term(Monomial{}, value);
  return p;
}

Coefficient FormalPolynomial::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Coefficient{} : it->second;
}

int FormalPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

void FormalPolynomial::add_term(const Monomial& monomial, Coefficient coefficient) {
  for (int i = n_vars_; i < kMaxFunctionalVars; ++i) {
    if (monomial.f[i] != 0 || monomial.f_conj[i] != 0) {
      throw std::out_of_range("FormalPolynomial::add_term: exponent on an unused variable");
    }
  }
  terms_[monomial] += coefficient;
}

FormalPolynomial FormalPolynomial::operator*(const FormalPolynomial& other) const {
  if (other.n_vars_ != n_vars_) {
    throw std::invalid_argument("FormalPolynomial: variable counts differ");
  }
  FormalPolynomial out(n_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m;
      for (int i = 0; i < n_vars_; ++i) {
        const int e = ma.f[i] + mb.f[i];
        const int ec = ma.f_conj[i] + mb.f_conj[i];
        if (e > kMaxExponent || ec > kMaxExponent) {
          throw std::overflow_error("FormalPolynomial: exponent overflow");
        }
        m.f[i] = static_cast<std::uint8_t>(e);
        m.f_conj[i] = static_cast<std::uint8_t>(ec);
      }
      out.terms_[m] += ca * cb;
    }
  }
  return out;
}

double max_term_count(int n_emitters, int n_vars) {
  double total = 0.0;
  for (int k = 0; k <= n_emitters; ++k) {
    const double c = combinatorics::binomial(k + n_vars - 1, n_vars - 1);
    total += c * c;
  }
  return total;
}

FormalPolynomial build_functional(const EmitterGeometry& geometry,
                                  std::span<const double> distinct_angles) {
  const int k = static_cast<int>(distinct_angles.size());
  check_vars(k);
  const int n = geometry.n_emitters();
  if (n > kMaxExponent) throw std::out_of_range("build_functional: too many emitters");
  if (max_term_count(n, k) > kMaxFunctionalTerms) {
    throw std::length_error("build_functional: expansion would exceed the term budget");
  }

  FormalPolynomial result = FormalPolynomial::constant(k, 1.0L);
  for (int j = 1; j <= n; ++j) {
    // 1 - beta_j beta_j^*, beta_j = sum_l c_{l,j} f_l
    std::vector<Coefficient> c(k);
    for (int l = 0; l < k; ++l) {
      c[l] = std::polar(1.0L, -static_cast<long double>(geometry.phase(j, distinct_angles[l])));
    }

    FormalPolynomial factor = FormalPolynomial::constant(k, 1.0L);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        Monomial m;
        m.f[a] = 1;
        m.f_conj[b] = 1;
        factor.add_term(m, -c[a] * std::conj(c[b]));
      }
    }
    result = result * factor;
  }
  return result;
}

double extract_gm(const FormalPolynomial& functional, std::span<const int> multiplicities) {
  if (static_cast<int>(multiplicities.size()) != functional.n_vars()) {
    throw std::invalid_argument("extract_gm: need one multiplicity per functional variable");
  }
  Monomial target;
  int m = 0;
  long double weight = 1.0L;
  for (int l = 0; l < functional.n_vars(); ++l) {
    const int mult = multiplicities[l];
    if (mult < 0) throw std::invalid_argument("extract_gm: negative multiplicity");
    m += mult;
    if (mult > kMaxExponent) return 0.0;
    target.f[l] = static_cast<std::uint8_t>(mult);
    target.f_conj[l] = static_cast<std::uint8_t>(mult);
    const long double fact = combinatorics::factorial(std::min(mult, 170));
    weight *= fact * fact;
  }
  if (m < 1) throw std::invalid_argument("extract_gm: total order must be at least 1");

  const Coefficient raw = (m % 2 == 0 ? 1.0L : -1.0L) * weight * functional.coefficient(target);
  const Complex g(static_cast<double>(raw.real()), static_cast<double>(raw.imag()));
  const double scale = std::max(1.0, std::abs(g.real()));
  if (std::abs(g.imag()) > kImagResidue * scale) {
    throw std::logic_error("extract_gm: imaginary residue " + std::to_string(g.imag()));
  }
  if (g.real() < -kImagResidue * scale) {
    throw std::logic_error("extract_gm: negative correlation " + std::to_string(g.real()));
  }
  return g.real();
}

}  // namespace hbtdicke
