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

#include <stdexcept>

#include "hbtdicke/geometry.hpp"
#include "hbtdicke/state_vector.hpp"

namespace hbtdicke {

/// Default ceiling on C(N,m) * m! for the brute-force path sum.
inline constexpr double kDefaultPathBudget = 1e8;

/// Below this |sin(x/2)| the array factor is replaced by its limit N^2.
inline constexpr double kArrayFactorSingularity = 1e-8;

class PathBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Normally ordered m-fold correlation by exact operator algebra:
 *
 *   G^(m)(theta_1..theta_m) = || E+(theta_m) ... E+(theta_1) |psi> ||^2
 *
 * Returns exactly 0 when m exceeds the excitation count of `state`.
 */
double g_m_exact(const EmitterGeometry& geometry, const DetectorList& detectors,
                 const StateVector& state);

/**
 * G^(m) of the fully excited state as a sum over final atomic states.
 *
 * For every m-subset of emitters the m! which-source assignments add
 * coherently (a permanent of the m x m phase submatrix); distinct subsets add
 * incoherently. Deliberately naive: this is the brute-force oracle for
 * g_m_exact. Throws PathBudgetExceeded when C(N,m) * m! > path_budget.
 */
double g_m_pathsum(const EmitterGeometry& geometry, const DetectorList& detectors,
                   double path_budget = kDefaultPathBudget);

/// Number of which-source paths the path sum enumerates, C(N,m) * m!.
double path_count(int n_emitters, int m);

/// sin^2(N x / 2) / sin^2(x / 2), with the removable singularity at x = 2 pi q set to N^2.
double array_factor(int n_emitters, double x);

/// Closed form of G^(m) with (m-1) detectors coincident and one offset by phase x.
double g_m_closed_coincident(int n_emitters, int m, double x);

/// Two-atom g^(2) = G^(2) / (G^(1))^2 = (1 + cos x) / 2.
double g2_two_atom_normalized(double x);

/// Thermal-source reference 1 + |gamma|^2.
double g2_thermal_reference(double gamma_mod);

/// Fringe visibility (m-1) / (m+1-2m/N) of the coincident-detector correlation.
double visibility_formula(int n_emitters, int m);

/// Estimated angular width 2 pi / (N kd) of the central maximum.
double peak_width_estimate(int n_emitters, double kd);

/// Phase average ((m-1)!)^2 C(N, m-1) (N-m+1) of the coincident-detector correlation.
double angular_average_gm(int n_emitters, int m);

}  // namespace hbtdicke
