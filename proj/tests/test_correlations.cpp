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

#include <algorithm>
#include <random>

#include "hbtdicke/combinatorics.hpp"
#include "hbtdicke/correlations.hpp"
#include "hbtdicke/field.hpp"
#include "hbtdicke/projection.hpp"
#include "hbtdicke/states.hpp"
#include "oracles.hpp"

using namespace hbtdicke;
using oracle::kPi;

namespace {

// Detector angle whose phase difference to theta1 = 0 is x for kd = 2 pi.
double angle_for_phase(double x) { return -std::asin(x / (2 * kPi)); }

std::vector<double> coincident_angles(int m, double t1, double t2) {
  std::vector<double> a(static_cast<std::size_t>(m - 1), t1);
  a.push_back(t2);
  return a;
}

}  // namespace

TEST_CASE("g_m_exact two-atom fringe and HOM zero") {
  const EmitterGeometry g(2, 2 * kPi);
  for (double x : {0.0, 0.5, 1.0, kPi / 2, 2.0, kPi}) {
    const double gm = g_m_exact(g, DetectorList::coincident(2, 0.0, angle_for_phase(x)), fully_excited(2));
    CHECK(std::abs(gm - 2 * (1 + std::cos(x))) <= 1e-12);
  }
  CHECK(g_m_exact(g, DetectorList({0.1, 0.2}), dicke_state(2, 1)) == 0.0);
  CHECK(g_m_exact(g, DetectorList({0.1, 0.2, 0.3}), fully_excited(2)) == 0.0);
}

TEST_CASE("g_m_exact error cases") {
  const EmitterGeometry g(2, 1.0);
  const StateVector half = apply_field(g, 0.0, fully_excited(2));
  CHECK_THROWS_AS(g_m_exact(g, DetectorList({0.0}), half), std::invalid_argument);
  CHECK_THROWS(g_m_exact(EmitterGeometry(3, 1.0), DetectorList({0.0}), fully_excited(2)));
}

TEST_CASE("g_m_pathsum examples") {
  const EmitterGeometry g2(2, 2 * kPi);
  for (double x : {0.0, 1.3, kPi}) {
    const DetectorList d = DetectorList::coincident(2, 0.0, angle_for_phase(x));
    CHECK(std::abs(g_m_pathsum(g2, d) - 2 * (1 + std::cos(x))) <= 1e-12);
  }
  CHECK(g_m_pathsum(EmitterGeometry(3, 2 * kPi), DetectorList({0.77})) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(g_m_pathsum(EmitterGeometry(4, 2 * kPi), DetectorList::coincident(4, 0.2, 0.2)) ==
        doctest::Approx(576.0).epsilon(1e-12));

  CHECK_THROWS(g_m_pathsum(g2, DetectorList({0.0, 0.0, 0.0})));
  CHECK(path_count(10, 10) == doctest::Approx(3628800.0));
  CHECK_THROWS_AS(g_m_pathsum(EmitterGeometry(10, 1.0), DetectorList::coincident(10, 0.0, 0.0), 1e6),
                  PathBudgetExceeded);
}

TEST_CASE("g_m_closed_coincident examples") {
  CHECK(g_m_closed_coincident(2, 2, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(g_m_closed_coincident(2, 2, kPi)) <= 1e-12);
  for (int n = 2; n <= 9; ++n) {
    for (double x : {0.0, 0.3, 2.1, 5.9}) CHECK(g_m_closed_coincident(n, 1, x) == doctest::Approx(n).epsilon(1e-14));
  }
  CHECK(g_m_closed_coincident(5, 5, 0.0) == doctest::Approx(14400.0).epsilon(1e-14));
  // removable singularity at x = 2 pi q
  CHECK(g_m_closed_coincident(5, 5, 2 * kPi) == doctest::Approx(14400.0).epsilon(1e-12));
  CHECK(g_m_closed_coincident(1, 1, 0.4) == 1.0);
  CHECK_THROWS(g_m_closed_coincident(3, 0, 0.0));
  CHECK_THROWS(g_m_closed_coincident(3, 4, 0.0));
}

TEST_CASE("normalized and thermal reference values") {
  CHECK(g2_two_atom_normalized(0.0) == doctest::Approx(1.0));
  CHECK(std::abs(g2_two_atom_normalized(kPi)) <= 1e-15);
  CHECK(g2_two_atom_normalized(kPi / 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g2_thermal_reference(1.0) == 2.0);
  CHECK(g2_thermal_reference(0.0) == 1.0);
  CHECK(g2_thermal_reference(0.5) == 1.25);
  CHECK_THROWS(g2_thermal_reference(-0.1));
  CHECK_THROWS(g2_thermal_reference(1.1));
}

TEST_CASE("visibility_formula examples and measured cross-check") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(visibility_formula(n, 1) == 0.0);
    CHECK(visibility_formula(n, n) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(visibility_formula(4, 2) == doctest::Approx(0.5).epsilon(1e-15));

  // measured from a dense sampling of the N=4, m=2 curve
  double hi = -1.0, lo = 1e300;
  for (int i = 0; i <= 20000; ++i) {
    const double v = g_m_closed_coincident(4, 2, 2 * kPi * i / 20000.0);
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  CHECK((hi - lo) / (hi + lo) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK_THROWS(visibility_formula(1, 1));
  CHECK_THROWS(visibility_formula(3, 4));
}

TEST_CASE("peak_width_estimate") {
  CHECK(peak_width_estimate(10, 2 * kPi) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(peak_width_estimate(20, 3.0) == doctest::Approx(peak_width_estimate(10, 3.0) / 2).epsilon(1e-15));
  for (int n = 2; n <= 12; ++n) {
    // first sign change of the Dirichlet kernel past the peak sits at 2 pi / N
    const double root = oracle::bisect([n](double x) { return oracle::dirichlet_sum(n, x); },
                                       kPi / n, 3 * kPi / n);
    CHECK(root == doctest::Approx(peak_width_estimate(n, 1.0)).epsilon(1e-12));
    CHECK(std::abs(g_m_closed_coincident(n, n, root)) <= 1e-9 * g_m_closed_coincident(n, n, 0.0));
  }
}

TEST_CASE("angular_average_gm examples and quadrature") {
  CHECK(angular_average_gm(2, 2) == doctest::Approx(2.0).epsilon(1e-15));
  for (int n = 1; n <= 9; ++n) CHECK(angular_average_gm(n, 1) == doctest::Approx(n).epsilon(1e-15));
  for (int n = 2; n <= 10; ++n) {
    CHECK(g_m_closed_coincident(n, n, 0.0) / angular_average_gm(n, n) == doctest::Approx(n).epsilon(1e-12));
    for (int m = 1; m <= n; ++m) {
      const double avg =
          oracle::simpson([&](double x) { return g_m_closed_coincident(n, m, x); }, 0.0, 2 * kPi, 4000) / (2 * kPi);
      CHECK(oracle::close(avg, angular_average_gm(n, m), 1e-6));
    }
  }
  CHECK_THROWS(angular_average_gm(3, 0));
}

TEST_CASE("property: exact equals path sum equals ordered-assignment oracle") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ang(-kPi / 2, kPi / 2);
  std::uniform_real_distribution<double> kd(0.5, 10.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int m = 1 + static_cast<int>(rng() % n);
    const EmitterGeometry g(n, kd(rng));
    std::vector<double> angles(m);
    for (double& a : angles) a = ang(rng);
    const DetectorList d(angles);
    const double ref = oracle::ordered_assignment_gm(n, g.kd(), angles);
    const double ex = g_m_exact(g, d, fully_excited(n));
    const double ps = g_m_pathsum(g, d);
    CHECK(relative_deviation(ex, ref) <= 1e-9);
    CHECK(relative_deviation(ps, ref) <= 1e-9);
    CHECK(ex >= -1e-12);
    CHECK(ps >= -1e-12);
  }
}

TEST_CASE("property: detector permutation invariance") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> ang(-kPi / 2, kPi / 2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int m = 1 + static_cast<int>(rng() % n);
    const EmitterGeometry g(n, 2 * kPi);
    std::vector<double> angles(m);
    for (double& a : angles) a = ang(rng);
    const double base = g_m_exact(g, DetectorList(angles), fully_excited(n));
    std::shuffle(angles.begin(), angles.end(), rng);
    const double perm = g_m_exact(g, DetectorList(angles), fully_excited(n));
    CHECK(std::abs(perm - base) <= 1e-12 * std::max(1.0, base));
  }
}

TEST_CASE("property: closed form agrees with the exact engine on a 181-point grid") {
  for (int n = 2; n <= 10; ++n) {
    const EmitterGeometry g(n, 2 * kPi);
    const StateVector phi = fully_excited(n);
    for (int m = 1; m <= n; ++m) {
      double worst = 0.0;
      for (int i = 0; i < 181; ++i) {
        const double x = 2 * kPi * i / 180.0;
        const double t2 = angle_for_phase(x);
        const double ex = g_m_exact(g, DetectorList(coincident_angles(m, 0.0, t2)), phi);
        worst = std::max(worst, relative_deviation(ex, g_m_closed_coincident(n, m, x)));
      }
      CHECK_MESSAGE(worst <= 1e-9, "N=" << n << " m=" << m);
    }
  }
}

TEST_CASE("property: peak law against integer arithmetic") {
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      const double expected = static_cast<double>(oracle::int_factorial(n) / oracle::int_factorial(n - m)) *
                              static_cast<double>(oracle::int_factorial(m));
      CHECK(oracle::close(g_m_closed_coincident(n, m, 0.0), expected, 1e-9));
    }
  }
}

TEST_CASE("combinatorics matches integer arithmetic and extends smoothly") {
  for (int n = 0; n <= 20; ++n) {
    CHECK(oracle::close(combinatorics::factorial(n), static_cast<double>(oracle::int_factorial(n)), 1e-12));
    for (int k = 0; k <= n; ++k) {
      CHECK(oracle::close(combinatorics::binomial(n, k), static_cast<double>(oracle::int_binomial(n, k)), 1e-12));
    }
  }
}
