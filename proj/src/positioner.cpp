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

#include "fmasec/positioner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fmasec {

namespace {

using RealMap = Eigen::Map<const RealVector>;

}  // namespace

TrigFeatures trig_features(std::span<const double> positions, const LinkGeometry& link) {
  link.validate();
  TrigFeatures tf;
  tf.kc = link.wavenumber() * direction_cosine(link.angle);
  const auto n = static_cast<Eigen::Index>(positions.size());
  tf.c.resize(n);
  tf.s.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ph = tf.kc * positions[static_cast<std::size_t>(i)];
    tf.c(i) = std::cos(ph);
    tf.s(i) = std::sin(ph);
  }
  return tf;
}

QuadraticForms QuadraticForms::from_weights(const ComplexVector& w) {
  const RealVector u = w.real();
  const RealVector z = w.imag();
  return {u * u.transpose() + z * z.transpose(), u * z.transpose() - z * u.transpose()};
}

double gamma_gain(const TrigFeatures& tf, const QuadraticForms& qf) {
  return tf.c.dot(qf.A * tf.c) + tf.s.dot(qf.A * tf.s) + 2.0 * tf.c.dot(qf.S * tf.s);
}

RealVector gamma_gradient(const TrigFeatures& tf, const QuadraticForms& qf) {
  const RealVector dc = 2.0 * (qf.A * tf.c + qf.S * tf.s);
  const RealVector ds = 2.0 * (qf.A * tf.s - qf.S * tf.c);
  return tf.kc * (tf.c.cwiseProduct(ds) - tf.s.cwiseProduct(dc));
}

double link_gain(std::span<const double> positions, const LinkGeometry& link, const QuadraticForms& qf) {
  const double amp = link.amplitude();
  return amp * amp * gamma_gain(trig_features(positions, link), qf);
}

RealVector link_gain_gradient(std::span<const double> positions, const LinkGeometry& link,
                              const QuadraticForms& qf) {
  const double amp = link.amplitude();
  return amp * amp * gamma_gradient(trig_features(positions, link), qf);
}

SecrecyObjective::SecrecyObjective(Setup setup) : s_(std::move(setup)) {
  if (s_.eves.empty()) throw std::invalid_argument("secrecy objective needs at least one Eve");
  if (!std::isfinite(s_.noise_power) || s_.noise_power <= 0.0)
    throw std::invalid_argument("noise power must be finite and > 0");
  if (s_.layout == PositionLayout::ConfMovable && s_.w_an.size() != 0)
    throw std::invalid_argument("ConfMovable layout carries no AN beamformer");
  if (s_.layout != PositionLayout::ConfMovable && s_.w_an.size() == 0)
    throw std::invalid_argument("layout requires an AN beamformer");
  if (s_.layout == PositionLayout::AnMovable &&
      s_.fixed_conf_positions.size() != static_cast<std::size_t>(s_.w_conf.size()))
    throw std::invalid_argument("fixed confidential array does not match its beamformer");
  if (s_.layout == PositionLayout::Joint && s_.conf_count != static_cast<std::size_t>(s_.w_conf.size()))
    throw std::invalid_argument("joint split does not match the confidential beamformer");
  q_conf_ = QuadraticForms::from_weights(s_.w_conf);
  if (s_.w_an.size() > 0) q_an_ = QuadraticForms::from_weights(s_.w_an);
}

SecrecyObjective::Split SecrecyObjective::split(std::span<const double> x) const {
  const auto n_conf = static_cast<std::size_t>(s_.w_conf.size());
  const auto n_an = static_cast<std::size_t>(s_.w_an.size());
  switch (s_.layout) {
    case PositionLayout::AnMovable:
      if (x.size() != n_an) throw std::invalid_argument("position vector does not match the AN array");
      return {s_.fixed_conf_positions, x};
    case PositionLayout::ConfMovable:
      if (x.size() != n_conf)
        throw std::invalid_argument("position vector does not match the confidential array");
      return {x, {}};
    case PositionLayout::Joint:
      if (x.size() != n_conf + n_an) throw std::invalid_argument("position vector does not match the joint array");
      return {x.subspan(0, n_conf), x.subspan(n_conf)};
  }
  throw std::logic_error("unknown position layout");
}

SlotChannels SecrecyObjective::channels(std::span<const double> x) const {
  const auto parts = split(x);
  return make_slot_channels(parts.conf, parts.an, s_.bob, s_.eves, s_.noise_power);
}

double SecrecyObjective::value(std::span<const double> x) const {
  return secrecy_objective(channels(x), s_.w_conf, s_.w_an);
}

RealVector SecrecyObjective::gradient(std::span<const double> x) const {
  const auto parts = split(x);
  const double ln2 = std::numbers::ln2;
  const double s2 = s_.noise_power;

  const double g_b = link_gain(parts.conf, s_.bob, q_conf_);
  double g_e = 0.0;
  for (const auto& e : s_.eves) g_e += link_gain(parts.conf, e, q_conf_);

  double gam_b = 0.0;
  double gam_e = 0.0;
  const bool has_an = !parts.an.empty();
  if (has_an) {
    gam_b = link_gain(parts.an, s_.bob, q_an_);
    for (const auto& e : s_.eves) gam_e += link_gain(parts.an, e, q_an_);
  }

  RealVector grad = RealVector::Zero(static_cast<Eigen::Index>(x.size()));

  // AN-side terms: -G_b gam_b' / ((gam_b+s2)(gam_b+s2+G_b)) + G_e gam_e' / ((gam_e+s2)(gam_e+s2+G_e))
  if (has_an && s_.layout != PositionLayout::ConfMovable) {
    const double kb = -g_b / (ln2 * (gam_b + s2) * (gam_b + s2 + g_b));
    const double ke = g_e / (ln2 * (gam_e + s2) * (gam_e + s2 + g_e));
    RealVector g_an = kb * link_gain_gradient(parts.an, s_.bob, q_an_);
    for (const auto& e : s_.eves) g_an += ke * link_gain_gradient(parts.an, e, q_an_);
    grad.tail(g_an.size()) = g_an;
  }

  // Confidential-side terms, present only when that array moves.
  if (s_.layout != PositionLayout::AnMovable) {
    const double kb = 1.0 / (ln2 * (gam_b + s2 + g_b));
    const double ke = -1.0 / (ln2 * (gam_e + s2 + g_e));
    RealVector g_conf = kb * link_gain_gradient(parts.conf, s_.bob, q_conf_);
    for (const auto& e : s_.eves) g_conf += ke * link_gain_gradient(parts.conf, e, q_conf_);
    grad.head(g_conf.size()) = g_conf;
  }
  return grad;
}

RealVector secrecy_gradient(const SecrecyObjective& objective, std::span<const double> x) {
  return objective.gradient(x);
}

std::vector<double> project_positions(std::span<const double> raw, double d_min, double range_max) {
  check_array_feasible(raw.size(), d_min, range_max);
  const std::size_t n = raw.size();
  std::vector<double> x(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::isfinite(raw[r])) throw GeometryError("cannot project a non-finite position");
    const double upper = range_max - static_cast<double>(n - 1 - r) * d_min;
    const double lower = r == 0 ? 0.0 : x[r - 1] + d_min;
    x[r] = std::max(lower, std::min(upper, raw[r]));
  }
  return x;
}

ArrayGeometry project(std::span<const double> raw, double d_min, double range_max) {
  return ArrayGeometry::movable(project_positions(raw, d_min, range_max), d_min, range_max);
}

void OptimizerConfig::validate() const {
  if (max_iterations == 0) throw std::invalid_argument("optimizer needs max_iterations > 0");
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("optimizer step must be > 0");
  if (!(momentum >= 0.0 && momentum < 1.0)) throw std::invalid_argument("momentum must lie in [0, 1)");
  if (!(momentum_cap >= 0.0 && momentum_cap < 1.0))
    throw std::invalid_argument("momentum cap must lie in [0, 1)");
  if (!(up_factor >= 1.0) || !(down_factor > 0.0 && down_factor <= 1.0))
    throw std::invalid_argument("adaptive factors out of range");
  if (!(velocity_damp >= 0.0 && velocity_damp <= 1.0) || !(velocity_decay >= 0.0 && velocity_decay <= 1.0))
    throw std::invalid_argument("velocity factors must lie in [0, 1]");
  if (window < 2) throw std::invalid_argument("trend window must be >= 2");
  if (!(rate_tol > 0.0)) throw std::invalid_argument("rate tolerance must be > 0");
}

OptimizerState OptimizerState::init(const ArrayGeometry& start, const OptimizerConfig& cfg) {
  cfg.validate();
  OptimizerState st;
  st.d_min = start.d_min();
  st.range_max = start.range_max();
  st.positions = project_positions(start.positions(), st.d_min, st.range_max);
  st.velocity = RealVector::Zero(static_cast<Eigen::Index>(st.positions.size()));
  st.momentum = std::min(cfg.momentum, cfg.momentum_cap);
  st.step = cfg.step;
  st.best_positions = st.positions;
  return st;
}

namespace {

enum class Method { Nesterov, Plain };

OptimizeResult run_optimizer(OptimizerState& st, const PositionObjective& objective,
                             const OptimizerConfig& cfg, Method method) {
  cfg.validate();
  double prev = objective.value(st.positions);
  st.best_rate = prev;
  st.best_positions = st.positions;
  st.recent.assign(1, prev);

  OptimizeResult out{ArrayGeometry::movable(st.positions, st.d_min, st.range_max), prev, {}, 0};
  out.trace.push_back({0, prev, prev, st.step, st.momentum, st.velocity.norm()});

  const auto n = static_cast<Eigen::Index>(st.positions.size());
  std::vector<double> probe(st.positions.size());
  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    st.iteration = it;
    RealMap x(st.positions.data(), n);
    if (method == Method::Nesterov) {
      Eigen::Map<RealVector>(probe.data(), n) = x + st.momentum * st.velocity;
      st.velocity = st.momentum * st.velocity + st.step * objective.gradient(probe);
    } else {
      st.velocity = st.step * objective.gradient(st.positions);
    }
    Eigen::Map<RealVector>(probe.data(), n) = x + st.velocity;
    st.positions = project_positions(probe, st.d_min, st.range_max);

    const double cur = objective.value(st.positions);
    st.recent.push_back(cur);
    if (st.recent.size() > cfg.window) st.recent.pop_front();

    if (method == Method::Nesterov) {
      if (cur > prev) {
        st.step *= cfg.up_factor;
        st.momentum = std::min(cfg.momentum_cap, st.momentum * cfg.up_factor);
      } else if (st.recent.back() - st.recent.front() > 0.0) {
        st.step *= cfg.down_factor;
        st.velocity *= cfg.velocity_damp;
      } else {
        st.step *= cfg.down_factor;
        st.momentum *= cfg.down_factor;
        st.velocity *= cfg.velocity_decay;
      }
    }
    if (cur > st.best_rate) {
      st.best_rate = cur;
      st.best_positions = st.positions;
    }
    out.trace.push_back({it, cur, st.best_rate, st.step, st.momentum, st.velocity.norm()});
    out.iterations = it;
    prev = cur;

    if (st.recent.size() == cfg.window) {
      const auto [lo, hi] = std::minmax_element(st.recent.begin(), st.recent.end());
      if (*hi - *lo < cfg.rate_tol) break;
    }
  }
  out.positions = ArrayGeometry::movable(st.best_positions, st.d_min, st.range_max);
  out.best_rate = st.best_rate;
  return out;
}

}  // namespace

OptimizeResult nmpga_optimize(OptimizerState& state, const PositionObjective& objective,
                              const OptimizerConfig& cfg) {
  return run_optimizer(state, objective, cfg, Method::Nesterov);
}

OptimizeResult pga_optimize(OptimizerState& state, const PositionObjective& objective,
                            const OptimizerConfig& cfg) {
  return run_optimizer(state, objective, cfg, Method::Plain);
}

OptimizeResult optimize_positions(PositionMethod method, OptimizerState& state,
                                  const PositionObjective& objective, const OptimizerConfig& cfg) {
  return method == PositionMethod::Nmpga ? nmpga_optimize(state, objective, cfg)
                                         : pga_optimize(state, objective, cfg);
}

std::vector<double> random_feasible_positions(std::size_t n, double d_min, double range_max,
                                              std::mt19937_64& rng) {
  check_array_feasible(n, d_min, range_max);
  const double slack = std::max(0.0, range_max - static_cast<double>(n - 1) * d_min);
  std::uniform_real_distribution<double> u(0.0, slack);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  std::sort(x.begin(), x.end());
  for (std::size_t r = 0; r < n; ++r) x[r] += static_cast<double>(r) * d_min;
  return project_positions(x, d_min, range_max);
}

std::vector<double> spread_positions(std::size_t n, double d_min, double range_max) {
  check_array_feasible(n, d_min, range_max);
  std::vector<double> x(n, 0.0);
  if (n > 1)
    for (std::size_t r = 0; r < n; ++r)
      x[r] = range_max * static_cast<double>(r) / static_cast<double>(n - 1);
  return project_positions(x, d_min, range_max);
}

OptimizeResult multistart_optimize(PositionMethod method, const ArrayGeometry& start,
                                   const PositionObjective& objective, const OptimizerConfig& cfg,
                                   std::size_t restarts, std::uint64_t seed) {
  auto state = OptimizerState::init(start, cfg);
  auto best = optimize_positions(method, state, objective, cfg);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < restarts; ++k) {
    const auto x0 = k == 0 ? spread_positions(start.size(), start.d_min(), start.range_max())
                           : random_feasible_positions(start.size(), start.d_min(), start.range_max(), rng);
    auto st = OptimizerState::init(ArrayGeometry::movable(x0, start.d_min(), start.range_max()), cfg);
    auto res = optimize_positions(method, st, objective, cfg);
    if (res.best_rate > best.best_rate) {
      best.positions = res.positions;
      best.best_rate = res.best_rate;
    }
  }
  return best;
}

std::size_t iterations_to_fraction(const std::vector<TraceRow>& trace, double fraction) {
  if (trace.empty()) throw std::invalid_argument("iterations_to_fraction: empty trace");
  const double final_best = trace.back().best;
  const double target = final_best - (1.0 - fraction) * std::abs(final_best);
  for (const auto& row : trace)
    if (row.best >= target) return row.iteration;
  return trace.back().iteration;
}

}  // namespace fmasec
