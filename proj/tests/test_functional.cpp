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

#include <doctest.h>

#include <random>

#include "hbtdicke/correlations.hpp"
#include "hbtdicke/functional.hpp"
#include "hbtdicke/projection.hpp"
#include "hbtdicke/states.hpp"
#include "oracles.hpp"

using namespace hbtdicke;
using oracle::kPi;

TEST_CASE("single emitter functional is 1 - f f*") {
  const std::vector<double> angles{0.3};
  const FormalPolynomial p = build_functional(EmitterGeometry(1, 2 * kPi), angles);
  CHECK(p.size() == 2);
  CHECK(p.constant_term() == Coefficient{1.0L});
  Monomial ff;
  ff.f[0] = 1;
  ff.f_conj[0] = 1;
  CHECK(std::abs(p.coefficient(ff) - Coefficient{-1.0L}) <= 1e-15L);
  CHECK(p.total_degree() == 2);
}

TEST_CASE("two-emitter mixed coefficient is the squared permanent") {
  const EmitterGeometry g(2, 2 * kPi);
  const std::vector<double> angles{0.2, -0.5};
  const FormalPolynomial p = build_functional(g, angles);
  Monomial mixed;
  mixed.f = {1, 1, 0, 0};
  mixed.f_conj = {1, 1, 0, 0};
  // permanent of the 2x2 phase matrix c_{l,j}
  auto c = [&](int l, int j) { return std::polar(1.0, -g.phase(j, angles[l])); };
  const double perm2 = std::norm(c(0, 1) * c(1, 2) + c(0, 2) * c(1, 1));
  CHECK(std::abs(static_cast<double>(p.coefficient(mixed).real()) - perm2) <= 1e-13);
  CHECK(std::abs(static_cast<double>(p.coefficient(mixed).imag())) <= 1e-13);

  const std::vector<int> mult{1, 1};
  const double x = g.detector_phase_difference(angles[0], angles[1]);
  CHECK(std::abs(extract_gm(p, mult) - 2 * (1 + std::cos(x))) <= 1e-12);
}

TEST_CASE("extract_gm edge cases") {
  const EmitterGeometry g(3, 2 * kPi);
  const std::vector<double> angles{0.1, 0.4};
  const FormalPolynomial p = build_functional(g, angles);
  const std::vector<int> too_many{4, 0};
  CHECK(extract_gm(p, too_many) == 0.0);
  const std::vector<int> zero{0, 0};
  CHECK_THROWS(extract_gm(p, zero));
  const std::vector<int> wrong_size{1};
  CHECK_THROWS(extract_gm(p, wrong_size));
  const std::vector<int> negative{-1, 2};
  CHECK_THROWS(extract_gm(p, negative));
}

TEST_CASE("build_functional rejects unsupported variable counts") {
  const EmitterGeometry g(2, 1.0);
  CHECK_THROWS_AS(build_functional(g, std::vector<double>{}), std::out_of_range);
  CHECK_THROWS_AS(build_functional(g, std::vector<double>{0, 0.1, 0.2, 0.3, 0.4}), std::out_of_range);
  CHECK_NOTHROW(build_functional(g, std::vector<double>{0, 0.1, 0.2, 0.3}));
}

TEST_CASE("property: structural invariants of the expansion") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ang(-kPi / 2, kPi / 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<double> angles(k);
    for (double& a : angles) a = ang(rng);
    const FormalPolynomial p = build_functional(EmitterGeometry(n, 2 * kPi), angles);
    CHECK(std::abs(p.constant_term() - Coefficient{1.0L}) <= 1e-15L);
    CHECK(p.total_degree() <= 2 * n);
    CHECK(static_cast<double>(p.size()) <= max_term_count(n, k));
    for (const auto& [mono, coeff] : p.terms()) {
      const Coefficient mirror = p.coefficient(mono.conjugate());
      CHECK(std::abs(coeff - std::conj(mirror)) <= 1e-12L * std::max(1.0L, std::abs(coeff)));
      int fdeg = 0, cdeg = 0;
      for (int i = 0; i < kMaxFunctionalVars; ++i) {
        fdeg += mono.f[i];
        cdeg += mono.f_conj[i];
      }
      CHECK(fdeg <= n);
      CHECK(cdeg <= n);
    }
  }
}

TEST_CASE("property: every multiplicity pattern over three angles matches the exact engine") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ang(-kPi / 2, kPi / 2);
  for (int n = 1; n <= 8; ++n) {
    const EmitterGeometry g(n, 2 * kPi);
    const StateVector phi = fully_excited(n);
    for (int k = 1; k <= 3; ++k) {
      std::vector<double> angles(k);
      for (double& a : angles) a = ang(rng);
      const FormalPolynomial p = build_functional(g, angles);
      std::vector<int> mult(k, 0);
      // odometer over multiplicity vectors with entries in [0, n]
      while (true) {
        int m = 0;
        for (int v : mult) m += v;
        if (m >= 1) {
          std::vector<double> dets;
          for (int l = 0; l < k; ++l) dets.insert(dets.end(), static_cast<std::size_t>(mult[l]), angles[l]);
          const double expected = m <= n ? g_m_exact(g, DetectorList(dets), phi) : 0.0;
          CHECK_MESSAGE(relative_deviation(extract_gm(p, mult), expected) <= 1e-9, "N=" << n << " m=" << m);
        }
        int pos = 0;
        while (pos < k && ++mult[pos] > n) mult[pos++] = 0;
        if (pos == k) break;
      }
    }
  }
}

TEST_CASE("property: coincident multiplicities reproduce the closed form") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
  for (int n = 2; n <= 8; ++n) {
    const EmitterGeometry g(n, 2 * kPi);
    for (int trial = 0; trial < 10; ++trial) {
      const double x = phase(rng);
      const std::vector<double> angles{0.0, -std::asin(x / (2 * kPi))};
      const FormalPolynomial p = build_functional(g, angles);
      for (int m = 1; m <= n; ++m) {
        const std::vector<int> mult{m - 1, 1};
        CHECK(relative_deviation(extract_gm(p, mult), g_m_closed_coincident(n, m, x)) <= 1e-9);
      }
      const std::vector<int> beyond{n + 1, 0};
      CHECK(extract_gm(p, beyond) == 0.0);
    }
  }
}

TEST_CASE("max_term_count small cases") {
  CHECK(max_term_count(1, 1) == 2.0);
  // K=2, N=1: 1 + 2^2 terms
  CHECK(max_term_count(1, 2) == 5.0);
  CHECK(max_term_count(3, 1) == 4.0);
}
