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

#include "fmasec/beamform.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace fmasec {

namespace {

double relative_asymmetry(const ComplexMatrix& m) {
  const double scale = m.norm();
  if (scale == 0.0) return 0.0;
  return (m - m.adjoint()).norm() / scale;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

ComplexMatrix outer(const ComplexVector& a) { return a * a.adjoint(); }

void check_power(double power) {
  if (!std::isfinite(power) || power <= 0.0)
    throw std::invalid_argument("power budget must be finite and > 0");
}

}  // namespace

void HermitianPencil::validate() const {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw std::invalid_argument("pencil matrices must be square and of equal size");
  if (A.rows() == 0) throw std::invalid_argument("pencil is empty");
  if (!A.allFinite() || !B.allFinite()) throw std::invalid_argument("pencil has non-finite entries");
  if (relative_asymmetry(A) > kHermitianTol) throw std::invalid_argument("pencil A is not Hermitian");
  if (relative_asymmetry(B) > kHermitianTol) throw std::invalid_argument("pencil B is not Hermitian");
}

ComplexVector canonicalize_phase(const ComplexVector& z) {
  if (z.size() == 0) return z;
  const double peak = z.cwiseAbs().maxCoeff();
  if (peak == 0.0) return z;
  Eigen::Index pick = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (std::abs(z(i)) >= peak * (1.0 - 1e-12)) {
      pick = i;
      break;
    }
  }
  const std::complex<double> rot = std::conj(z(pick)) / std::abs(z(pick));
  ComplexVector out = z * rot;
  out(pick) = std::abs(out(pick));
  return out;
}

GeneralizedEigenpair max_generalized_eigenpair(const HermitianPencil& p) {
  p.validate();
  const ComplexMatrix A = hermitian_part(p.A);
  const ComplexMatrix B = hermitian_part(p.B);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> beig(B, Eigen::EigenvaluesOnly);
  const double lo = beig.eigenvalues().minCoeff();
  const double hi = beig.eigenvalues().maxCoeff();
  if (!(lo > 0.0)) throw ConditioningError("pencil B is not positive definite");
  if (hi / lo > kMaxPencilCondition)
    throw ConditioningError("pencil B is ill-conditioned (cond = " + std::to_string(hi / lo) + ")");

  Eigen::LLT<ComplexMatrix> llt(B);
  if (llt.info() != Eigen::Success) throw ConditioningError("Cholesky factorization of B failed");
  const ComplexMatrix Lm = llt.matrixL();
  const auto lower = Lm.triangularView<Eigen::Lower>();
  // C = L^-1 A L^-H
  const ComplexMatrix left = lower.solve(A);
  const ComplexMatrix C = hermitian_part(lower.solve(left.adjoint()).adjoint());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ceig(C);
  if (ceig.info() != Eigen::Success) throw ConditioningError("eigensolver did not converge");
  const auto& evals = ceig.eigenvalues();
  const Eigen::Index n = evals.size();
  const double top = evals(n - 1);
  const double gap_tol = 1e-10 * std::max(std::abs(top), 1.0);
  Eigen::Index pick = n - 1;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (evals(j) >= top - gap_tol) {
      pick = j;
      break;
    }
  }

  // z = L^-H y
  ComplexVector z = Lm.adjoint().triangularView<Eigen::Upper>().solve(ceig.eigenvectors().col(pick));
  z.normalize();
  return {evals(pick), canonicalize_phase(z)};
}

ComplexVector solve_max_generalized_eigvec(const HermitianPencil& p) {
  return max_generalized_eigenpair(p).vector;
}

double rayleigh_quotient(const HermitianPencil& p, const ComplexVector& z) {
  const double num = z.dot(p.A * z).real();
  const double den = z.dot(p.B * z).real();
  return num / den;
}

Beamformer Beamformer::uniform(std::size_t n, double power) {
  check_power(power);
  if (n == 0) throw std::invalid_argument("beamformer needs at least one element");
  const double amp = std::sqrt(power / static_cast<double>(n));
  return {ComplexVector::Constant(static_cast<Eigen::Index>(n), amp), power};
}

bool Beamformer::full_power(double rel_tol) const {
  return std::abs(weights.squaredNorm() - power) <= rel_tol * power;
}

GammaMatrices build_gamma(const SlotChannels& ch, const ComplexVector& w_an) {
  const auto g = gain_breakdown(ch, ComplexVector::Zero(ch.conf_bob.size()), w_an);
  GammaMatrices out;
  out.bob = outer(ch.conf_bob) / (ch.noise_power + g.an_bob);
  out.eve = ComplexMatrix::Zero(ch.conf_bob.size(), ch.conf_bob.size());
  for (const auto& a : ch.conf_eves) out.eve += outer(a);
  out.eve /= ch.noise_power + g.an_eve;
  return out;
}

HermitianPencil fpa_pencil(const SlotChannels& ch, const ComplexVector& w_an, double power) {
  check_power(power);
  const auto gm = build_gamma(ch, w_an);
  const auto n = ch.conf_bob.size();
  const ComplexMatrix reg = ComplexMatrix::Identity(n, n) / power;
  return {hermitian_part(gm.bob + reg), hermitian_part(gm.eve + reg)};
}

HermitianPencil ma_pencil(const SlotChannels& ch, const ComplexVector& w_conf, double power) {
  check_power(power);
  if (!ch.has_an()) throw std::invalid_argument("ma_pencil: slot has no AN array");
  const auto g = gain_breakdown(ch, w_conf, ComplexVector());
  const auto n = ch.an_bob.size();
  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
  ComplexMatrix ke = ComplexMatrix::Zero(n, n);
  for (const auto& a : ch.an_eves) ke += outer(a);
  const ComplexMatrix inv_b = (ch.noise_power * I + power * outer(ch.an_bob)).ldlt().solve(I);
  const ComplexMatrix inv_e = (ch.noise_power * I + power * ke).ldlt().solve(I);
  return {hermitian_part(I + g.conf_bob * inv_b), hermitian_part(I + g.conf_eve * inv_e)};
}

Beamformer optimal_w_fpa(const SlotChannels& ch, const ComplexVector& w_an, double power) {
  const auto z = solve_max_generalized_eigvec(fpa_pencil(ch, w_an, power));
  return {std::sqrt(power) * z, power};
}

Beamformer optimal_w_ma(const SlotChannels& ch, const ComplexVector& w_conf, double power) {
  const auto z = solve_max_generalized_eigvec(ma_pencil(ch, w_conf, power));
  return {std::sqrt(power) * z, power};
}

double conf_step_objective(const SlotChannels& ch, const ComplexVector& w_an, const ComplexVector& w_conf) {
  const auto gm = build_gamma(ch, w_an);
  const double num = 1.0 + w_conf.dot(gm.bob * w_conf).real();
  const double den = 1.0 + w_conf.dot(gm.eve * w_conf).real();
  return num / den;
}

double an_step_objective(const SlotChannels& ch, const ComplexVector& w_conf, const ComplexVector& w_an) {
  const auto g = gain_breakdown(ch, w_conf, w_an);
  return (1.0 + g.conf_bob / (ch.noise_power + g.an_bob)) /
         (1.0 + g.conf_eve / (ch.noise_power + g.an_eve));
}

}  // namespace fmasec
