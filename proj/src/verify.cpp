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

#include "hbtdicke/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hbtdicke/combinatorics.hpp"
#include "hbtdicke/correlations.hpp"
#include "hbtdicke/field.hpp"
#include "hbtdicke/functional.hpp"
#include "hbtdicke/projection.hpp"
#include "hbtdicke/states.hpp"

namespace hbtdicke {

namespace {

std::string locate(int n, int m, std::span<const double> angles) {
  std::ostringstream os;
  os.precision(17);
  os << "N=" << n << " m=" << m << " angles=[";
  for (std::size_t i = 0; i < angles.size(); ++i) os << (i ? ", " : "") << angles[i];
  os << "]";
  return os.str();
}

class Suite {
 public:
  Suite(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void record(double deviation, const std::string& where) {
    ++result_.checks;
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    if (deviation > result_.max_deviation || result_.worst_case.empty()) {
      result_.max_deviation = std::max(result_.max_deviation, deviation);
      result_.worst_case = where;
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.n_min < 1 || options.n_max < options.n_min) {
    throw std::invalid_argument("run_verification: invalid emitter range");
  }
  if (options.n_max > kMaxExactEmitters) {
    throw std::invalid_argument("run_verification: N exceeds the exact-engine cap of " +
                                std::to_string(kMaxExactEmitters));
  }
  if (options.samples < 1) throw std::invalid_argument("run_verification: need at least one sample");

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi / 2, std::numbers::pi / 2);

  Suite pathsum("exact-vs-pathsum", options.tolerance);
  Suite closed("exact-vs-closed", options.tolerance);
  Suite functional("exact-vs-functional", options.tolerance);
  Suite factorization("factorization", options.tolerance);
  Suite dicke("dicke-preparation", options.tolerance);
  Suite structure("functional-structure", options.tolerance);

  for (int n = options.n_min; n <= options.n_max; ++n) {
    const EmitterGeometry geometry(n, options.kd);
    const StateVector phi = fully_excited(n);

    auto exact = [&](std::span<const double> angles) {
      std::vector<double> a(angles.begin(), angles.end());
      if (options.inject_fault) a.back() = -a.back();
      return g_m_exact(geometry, DetectorList(std::move(a)), phi);
    };

    for (int m = 1; m <= n; ++m) {
      for (int s = 0; s < options.samples; ++s) {
        std::vector<double> tuple(static_cast<std::size_t>(m));
        for (double& a : tuple) a = angle(rng);
        pathsum.record(relative_deviation(exact(tuple), g_m_pathsum(geometry, DetectorList(tuple))),
                       locate(n, m, tuple));

        const double theta1 = angle(rng);
        const double theta2 = angle(rng);
        const DetectorList coincident = DetectorList::coincident(m, theta1, theta2);
        const double direct = exact(coincident.angles());
        const double x = geometry.detector_phase_difference(theta1, theta2);
        closed.record(relative_deviation(direct, g_m_closed_coincident(n, m, x)),
                      locate(n, m, coincident.angles()));

        const std::array<double, 2> pair{theta1, theta2};
        const std::array<int, 2> mult{m - 1, 1};
        functional.record(relative_deviation(direct, extract_gm(build_functional(geometry, pair), mult)),
                          locate(n, m, coincident.angles()));

        // projected route; the direct value is shared with the suites above so
        // fault injection shows up here as well
        const ProjectionResult prepared = cascade_subtract(geometry, theta1, m - 1, phi);
        double projected = 0.0;
        if (prepared.possible()) {
          projected = intensity(geometry, theta2, prepared.state()) * prepared.weight;
        }
        factorization.record(relative_deviation(direct, projected), locate(n, m, coincident.angles()));
      }

      // theta1 = 0: the (m-1)-fold projection is the symmetric Dicke state
      const double f = combinatorics::factorial(m - 1);
      const double dicke_norm = combinatorics::binomial(n, m - 1) * f * f;
      const StateVector target = dicke_state(n, m - 1);
      const ProjectionResult prepared = cascade_subtract(geometry, 0.0, m - 1, phi);
      const std::array<double, 1> origin{0.0};
      if (!prepared.possible()) {
        dicke.record(std::numeric_limits<double>::infinity(), locate(n, m, origin));
      } else {
        dicke.record(1.0 - fidelity(prepared.state(), target), locate(n, m, origin));
        dicke.record(relative_deviation(prepared.weight, dicke_norm), locate(n, m, origin));
      }
      for (int s = 0; s < options.samples; ++s) {
        const double theta2 = angle(rng);
        const DetectorList coincident = DetectorList::coincident(m, 0.0, theta2);
        const double via_dicke = intensity(geometry, theta2, target) * dicke_norm;
        dicke.record(relative_deviation(exact(coincident.angles()), via_dicke),
                     locate(n, m, coincident.angles()));
      }
    }

    // structural invariants of the expanded functional over up to three angles
    for (int k = 1; k <= 3; ++k) {
      std::vector<double> angles(static_cast<std::size_t>(k));
      for (double& a : angles) a = angle(rng);
      const FormalPolynomial poly = build_functional(geometry, angles);
      long double hermitian = 0.0L;
      long double scale = 1.0L;
      for (const auto& [mono, c] : poly.terms()) scale = std::max(scale, std::abs(c));
      for (const auto& [mono, c] : poly.terms()) {
        hermitian = std::max(hermitian, std::abs(c - std::conj(poly.coefficient(mono.conjugate()))) / scale);
      }
      structure.record(static_cast<double>(hermitian), locate(n, 0, angles) + " (hermiticity)");
      structure.record(static_cast<double>(std::abs(poly.constant_term() - Coefficient{1.0L})), locate(n, 0, angles) + " (constant term)");
      const bool within_bound = static_cast<double>(poly.size()) <= max_term_count(n, k) &&
                                poly.total_degree() <= 2 * n;
      structure.record(within_bound ? 0.0 : std::numeric_limits<double>::infinity(),
                       locate(n, 0, angles) + " (term count)");
    }
  }

  VerifyReport report;
  for (Suite* s : {&pathsum, &closed, &functional, &factorization, &dicke, &structure}) {
    report.suites.push_back(s->take());
  }
  return report;
}

}  // namespace hbtdicke
