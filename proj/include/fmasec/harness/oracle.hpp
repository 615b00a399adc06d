// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FMASEC_HARNESS_ORACLE_HPP
#define FMASEC_HARNESS_ORACLE_HPP

#include "fmasec/harness/scenario.hpp"
#include "fmasec/positioner.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace fmasec {

/// Central difference of f along coordinate i with step h.
RealVector central_difference(const PositionObjective& f, std::span<const double> x, double h);

/// Per-component |g - g_fd| / max(|g_fd|, floor), floor = 1e-6 max_i |g_fd_i| (and >= 1e-12).
double gradient_relative_error(const RealVector& analytic, const RealVector& numeric);

struct GradientOracleReport {
  std::size_t trials = 0;
  double max_relative_error = 0.0;
  std::size_t worst_trial = 0;
  double step = 1e-7;
  std::vector<double> richardson_steps;   // h, h/2, h/4
  std::vector<double> richardson_errors;  // max |g - g_fd| at each step
  double observed_order = 0.0;            // log2 of successive error ratios, averaged
  double tolerance = 1e-5;

  [[nodiscard]] bool order_ok() const { return observed_order > 1.8 && observed_order < 2.2; }
  [[nodiscard]] bool passed() const { return max_relative_error < tolerance && order_ok(); }
};

/// Random angles, positions and full-power beamformers at the scenario's N,
/// M and powers. Trials cycle through the three position layouts.
GradientOracleReport gradient_oracle(const Scenario& scn, std::size_t trials, std::uint64_t seed);

struct BeamformerOracleReport {
  std::size_t instances = 0;
  std::size_t probes = 0;
  double fpa_min_margin = 0.0;      // min over instances of (closed - best probe) / closed
  std::size_t fpa_violations = 0;   // probes beating the closed form beyond rounding
  double ma_min_ratio = 0.0;        // min over instances of closed / best probe, random w_conf
  std::size_t ma_passing = 0;       // instances at or above ma_threshold, random w_conf
  double ma_min_ratio_ao = 0.0;     // same with w_conf from the FPA closed form (the AO call site)
  std::size_t ma_passing_ao = 0;
  double eig_max_rel_diff = 0.0;    // pencil value vs direct eigenvalues of B^-1 A
  double ma_threshold = 0.95;

  [[nodiscard]] bool fpa_ok() const { return fpa_violations == 0; }
  [[nodiscard]] bool ma_ok() const { return ma_min_ratio >= ma_threshold; }
  [[nodiscard]] bool passed() const { return fpa_ok() && ma_ok() && eig_max_rel_diff < 1e-8; }
};

/// Uniformly random full-power probe of length n and power P.
ComplexVector random_full_power(std::size_t n, double power, std::mt19937_64& rng);

BeamformerOracleReport beamformer_oracle(const Scenario& scn, std::size_t instances, std::size_t probes,
                                         std::uint64_t seed);

struct GridTrial {
  double grid_best = 0.0;
  double optimizer_best = 0.0;
  /// Non-positive grid optima only ask the optimizer to match or beat them.
  [[nodiscard]] double ratio() const {
    if (grid_best <= 0.0) return optimizer_best >= grid_best ? 1.0 : 0.0;
    return optimizer_best / grid_best;
  }
};

struct GridOracleReport {
  std::vector<GridTrial> trials;
  double tolerance = 0.02;

  [[nodiscard]] double min_ratio() const;
  [[nodiscard]] bool passed() const { return !trials.empty() && min_ratio() >= 1.0 - tolerance; }
};

/// Two movable AN elements over [0, 2 lambda] against an exhaustive
/// 0.05 lambda grid. The confidential beam is the closed form on the fixed
/// pair; NMPGA runs from the uniform start plus `restarts` extra starts.
GridOracleReport grid_oracle(const Scenario& scn, std::size_t trials, std::size_t restarts, std::uint64_t seed);

}  // namespace fmasec

#endif  // FMASEC_HARNESS_ORACLE_HPP
