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

#include "fmasec/harness/oracle.hpp"

#include "fmasec/beamform.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace fmasec {

RealVector central_difference(const PositionObjective& f, std::span<const double> x, double h) {
  std::vector<double> p(x.begin(), x.end());
  RealVector g(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i] = x[i] + h;
    const double up = f.value(p);
    p[i] = x[i] - h;
    const double down = f.value(p);
    p[i] = x[i];
    g(static_cast<Eigen::Index>(i)) = (up - down) / (2.0 * h);
  }
  return g;
}

double gradient_relative_error(const RealVector& analytic, const RealVector& numeric) {
  if (analytic.size() != numeric.size()) throw std::invalid_argument("gradient length mismatch");
  const double floor = std::max(1e-6 * numeric.cwiseAbs().maxCoeff(), 1e-12);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < numeric.size(); ++i) {
    const double denom = std::max(std::abs(numeric(i)), floor);
    worst = std::max(worst, std::abs(analytic(i) - numeric(i)) / denom);
  }
  return worst;
}

ComplexVector random_full_power(std::size_t n, double power, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector w(static_cast<Eigen::Index>(n));
  do {
    for (auto& v : w) v = {g(rng), g(rng)};
  } while (w.norm() == 0.0);
  return w * (std::sqrt(power) / w.norm());
}

namespace {

double random_angle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, kPi);
  return u(rng);
}

std::vector<LinkGeometry> random_eves(const Scenario& scn, std::mt19937_64& rng) {
  std::vector<LinkGeometry> eves;
  for (std::size_t i = 0; i < scn.eves; ++i) eves.push_back(scn.link(random_angle(rng)));
  return eves;
}

std::vector<double> uniform_grid(std::size_t n, double d) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i) * d;
  return x;
}

struct GradientCase {
  SecrecyObjective objective;
  std::vector<double> x;
};

GradientCase random_gradient_case(const Scenario& scn, std::size_t trial, std::mt19937_64& rng) {
  SecrecyObjective::Setup s;
  s.bob = scn.link(random_angle(rng));
  s.eves = random_eves(scn, rng);
  s.noise_power = scn.noise_power;
  s.w_conf = random_full_power(scn.n, scn.p_fpa, rng);
  const bool joint_fits = static_cast<double>(2 * scn.n - 1) * scn.d_min <= scn.range_max;
  std::vector<double> x;
  switch (trial % 3) {
    case 0:
      s.layout = PositionLayout::AnMovable;
      s.fixed_conf_positions = uniform_grid(scn.n, scn.d_min);
      s.w_an = random_full_power(scn.n, scn.p_ma, rng);
      x = random_feasible_positions(scn.n, scn.d_min, scn.range_max, rng);
      break;
    case 1:
      if (joint_fits) {
        s.layout = PositionLayout::Joint;
        s.conf_count = scn.n;
        s.w_an = random_full_power(scn.n, scn.p_ma, rng);
        x = random_feasible_positions(2 * scn.n, scn.d_min, scn.range_max, rng);
        break;
      }
      [[fallthrough]];
    default:
      s.layout = PositionLayout::ConfMovable;
      x = random_feasible_positions(scn.n, scn.d_min, scn.range_max, rng);
      break;
  }
  return {SecrecyObjective(std::move(s)), std::move(x)};
}

}  // namespace

GradientOracleReport gradient_oracle(const Scenario& scn, std::size_t trials, std::uint64_t seed) {
  scn.validate();
  GradientOracleReport rep;
  rep.trials = trials;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto c = random_gradient_case(scn, t, rng);
    const RealVector g = secrecy_gradient(c.objective, c.x);
    const RealVector fd = central_difference(c.objective, c.x, rep.step);
    const double err = gradient_relative_error(g, fd);
    if (!(err <= rep.max_relative_error)) {
      rep.max_relative_error = err;
      rep.worst_trial = t;
    }
  }

  // Order study on a fresh instance with steps where truncation dominates rounding.
  const auto c = random_gradient_case(scn, 0, rng);
  const RealVector g = secrecy_gradient(c.objective, c.x);
  const double h0 = 0.01 * scn.wavelength;
  for (double h : {h0, h0 / 2, h0 / 4}) {
    rep.richardson_steps.push_back(h);
    rep.richardson_errors.push_back((g - central_difference(c.objective, c.x, h)).cwiseAbs().maxCoeff());
  }
  const auto& e = rep.richardson_errors;
  if (e[1] > 0.0 && e[2] > 0.0)
    rep.observed_order = 0.5 * (std::log2(e[0] / e[1]) + std::log2(e[1] / e[2]));
  else
    rep.observed_order = 2.0;  // exact to rounding: nothing to measure
  return rep;
}

BeamformerOracleReport beamformer_oracle(const Scenario& scn, std::size_t instances, std::size_t probes,
                                         std::uint64_t seed) {
  scn.validate();
  BeamformerOracleReport rep;
  rep.instances = instances;
  rep.probes = probes;
  rep.fpa_min_margin = std::numeric_limits<double>::infinity();
  rep.ma_min_ratio = std::numeric_limits<double>::infinity();
  rep.ma_min_ratio_ao = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < instances; ++k) {
    const auto bob = scn.link(random_angle(rng));
    const auto eves = random_eves(scn, rng);
    const auto conf = uniform_grid(scn.n, scn.d_min);
    const auto an = random_feasible_positions(scn.n, scn.d_min, scn.range_max, rng);
    const auto ch = make_slot_channels(conf, an, bob, eves, scn.noise_power);

    const ComplexVector w_an = random_full_power(scn.n, scn.p_ma, rng);
    const auto pencil = fpa_pencil(ch, w_an, scn.p_fpa);
    const auto top = max_generalized_eigenpair(pencil);
    const ComplexMatrix direct = pencil.B.ldlt().solve(pencil.A);
    const double direct_top = Eigen::ComplexEigenSolver<ComplexMatrix>(direct).eigenvalues().real().maxCoeff();
    rep.eig_max_rel_diff = std::max(rep.eig_max_rel_diff, std::abs(top.value - direct_top) / std::abs(direct_top));

    const auto w_fpa = optimal_w_fpa(ch, w_an, scn.p_fpa).weights;
    const double closed_fpa = conf_step_objective(ch, w_an, w_fpa);
    double best_fpa = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < probes; ++p) {
      const double v = conf_step_objective(ch, w_an, random_full_power(scn.n, scn.p_fpa, rng));
      best_fpa = std::max(best_fpa, v);
      if (v > closed_fpa * (1.0 + 1e-12)) ++rep.fpa_violations;
    }
    rep.fpa_min_margin = std::min(rep.fpa_min_margin, (closed_fpa - best_fpa) / closed_fpa);

    auto ma_ratio = [&](const ComplexVector& w_conf) {
      const auto w_ma = optimal_w_ma(ch, w_conf, scn.p_ma).weights;
      const double closed = an_step_objective(ch, w_conf, w_ma);
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t p = 0; p < probes; ++p)
        best = std::max(best, an_step_objective(ch, w_conf, random_full_power(scn.n, scn.p_ma, rng)));
      return closed / best;
    };
    const double r_rand = ma_ratio(random_full_power(scn.n, scn.p_fpa, rng));
    const double r_ao = ma_ratio(w_fpa);
    rep.ma_min_ratio = std::min(rep.ma_min_ratio, r_rand);
    rep.ma_min_ratio_ao = std::min(rep.ma_min_ratio_ao, r_ao);
    rep.ma_passing += r_rand >= rep.ma_threshold ? 1 : 0;
    rep.ma_passing_ao += r_ao >= rep.ma_threshold ? 1 : 0;
  }
  return rep;
}

double GridOracleReport::min_ratio() const {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& t : trials) r = std::min(r, t.ratio());
  return r;
}

GridOracleReport grid_oracle(const Scenario& scn, std::size_t trials, std::size_t restarts, std::uint64_t seed) {
  scn.validate();
  const double lam = scn.wavelength;
  const double d = lam / 2;
  const double range = 2 * lam;
  const double cell = 0.05 * lam;
  const auto cells = static_cast<int>(std::lround(range / cell));
  const auto gap = static_cast<int>(std::lround(d / cell));

  GridOracleReport rep;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    SecrecyObjective::Setup s;
    s.layout = PositionLayout::AnMovable;
    s.bob = scn.link(random_angle(rng));
    s.eves = random_eves(scn, rng);
    s.noise_power = scn.noise_power;
    s.fixed_conf_positions = uniform_grid(2, d);
    s.w_an = random_full_power(2, scn.p_ma, rng);
    const auto ch = make_slot_channels(s.fixed_conf_positions, s.fixed_conf_positions, s.bob, s.eves,
                                       s.noise_power);
    s.w_conf = optimal_w_fpa(ch, s.w_an, scn.p_fpa).weights;
    const SecrecyObjective obj(s);

    GridTrial trial;
    trial.grid_best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= cells; ++i)
      for (int j = i + gap; j <= cells; ++j) {
        const std::vector<double> x{i * cell, j * cell};
        trial.grid_best = std::max(trial.grid_best, obj.value(x));
      }
    const auto r = multistart_optimize(PositionMethod::Nmpga, ArrayGeometry::movable_uniform(2, d, range), obj,
                                       scn.ao.nmpga, restarts, sub_seed(seed, "trial" + std::to_string(t)));
    trial.optimizer_best = r.best_rate;
    rep.trials.push_back(trial);
  }
  return rep;
}

}  // namespace fmasec
