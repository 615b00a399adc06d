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

#ifndef FMASEC_BEAMFORM_HPP
#define FMASEC_BEAMFORM_HPP

#include "fmasec/geometry.hpp"
#include "fmasec/metrics.hpp"

#include <stdexcept>

namespace fmasec {

/// B is singular, indefinite, or too ill-conditioned to factorize reliably.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kMaxPencilCondition = 1e12;

/// Matrix pair (A, B) whose generalized Rayleigh quotient z^H A z / z^H B z is maximized.
struct HermitianPencil {
  ComplexMatrix A;
  ComplexMatrix B;

  /// Square, equal sizes, Hermitian within kHermitianTol (relative Frobenius).
  /// Throws std::invalid_argument. Definiteness is checked by the solver.
  void validate() const;
};

struct GeneralizedEigenpair {
  double value = 0.0;
  ComplexVector vector;  // unit norm, largest-|entry| real and positive
};

/// Hermitian-definite reduction: B = L L^H, C = L^-1 A L^-H, then a
/// self-adjoint eigensolve of C. Throws ConditioningError when B is not
/// positive definite or cond(B) > kMaxPencilCondition.
GeneralizedEigenpair max_generalized_eigenpair(const HermitianPencil& p);
ComplexVector solve_max_generalized_eigvec(const HermitianPencil& p);

double rayleigh_quotient(const HermitianPencil& p, const ComplexVector& z);

/// Multiply by a unit phase so the largest-magnitude entry (lowest index on
/// ties) is real and positive. Zero vectors are returned unchanged.
ComplexVector canonicalize_phase(const ComplexVector& z);

/// Complex weights together with the budget they are meant to exhaust.
struct Beamformer {
  ComplexVector weights;
  double power = 0.0;

  /// Uniform weights sqrt(P/N) on every element.
  static Beamformer uniform(std::size_t n, double power);

  [[nodiscard]] bool full_power(double rel_tol = 1e-9) const;
};

struct GammaMatrices {
  ComplexMatrix bob;  // a_b a_b^H / (sigma^2 + G_an(theta_b))
  ComplexMatrix eve;  // sum_i a_ei a_ei^H / (sigma^2 + sum_i G_an(theta_ei))
};

GammaMatrices build_gamma(const SlotChannels& ch, const ComplexVector& w_an);

/// (Gamma_b + I/P, Gamma_e + I/P).
HermitianPencil fpa_pencil(const SlotChannels& ch, const ComplexVector& w_an, double power);

/// (I + G_b (sigma^2 I + P K_b)^-1, I + G_e (sigma^2 I + P K_e)^-1) with
/// G the confidential gains and K the AN-array steering outer products.
/// A higher quotient means less AN at Bob and more at the Eves.
HermitianPencil ma_pencil(const SlotChannels& ch, const ComplexVector& w_conf, double power);

/// Closed-form confidential beamformer: sqrt(P) times the top generalized eigenvector.
Beamformer optimal_w_fpa(const SlotChannels& ch, const ComplexVector& w_an, double power);

/// Closed-form AN beamformer from the same construction on the MA pencil.
/// Exact for the pencil quotient, only a surrogate for the true sub-problem.
Beamformer optimal_w_ma(const SlotChannels& ch, const ComplexVector& w_conf, double power);

/// (1 + w^H Gamma_b w) / (1 + w^H Gamma_e w).
double conf_step_objective(const SlotChannels& ch, const ComplexVector& w_an, const ComplexVector& w_conf);

/// (1 + G_b / (sigma^2 + w^H K_b w)) / (1 + G_e / (sigma^2 + w^H K_e w)).
double an_step_objective(const SlotChannels& ch, const ComplexVector& w_conf, const ComplexVector& w_an);

}  // namespace fmasec

#endif  // FMASEC_BEAMFORM_HPP
