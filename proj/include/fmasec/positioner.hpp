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

#ifndef FMASEC_POSITIONER_HPP
#define FMASEC_POSITIONER_HPP

#include "fmasec/geometry.hpp"
#include "fmasec/metrics.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <vector>

namespace fmasec {

/// c_n = cos(k x_n cos(theta)), s_n = sin(k x_n cos(theta)) for one receiver.
struct TrigFeatures {
  RealVector c;
  RealVector s;
  double kc = 0.0;  // k cos(theta), the derivative scale of the phase
};

TrigFeatures trig_features(std::span<const double> positions, const LinkGeometry& link);

/// w = u + j z  ->  A = u u^T + z z^T (symmetric), S = u z^T - z u^T (antisymmetric).
struct QuadraticForms {
  RealMatrix A;
  RealMatrix S;

  static QuadraticForms from_weights(const ComplexVector& w);
};

/// c^T A c + s^T A s + 2 c^T S s, i.e. |a^H w|^2 with unit channel magnitude.
double gamma_gain(const TrigFeatures& tf, const QuadraticForms& qf);

/// d gamma / d x = -D (2Ac + 2Ss) + Lambda (2As - 2Sc), D = diag(kc s), Lambda = diag(kc c).
RealVector gamma_gradient(const TrigFeatures& tf, const QuadraticForms& qf);

/// Gain and its position gradient toward one link, path-loss factor included.
double link_gain(std::span<const double> positions, const LinkGeometry& link, const QuadraticForms& qf);
RealVector link_gain_gradient(std::span<const double> positions, const LinkGeometry& link,
                              const QuadraticForms& qf);

/// Which array(s) the position vector moves.
enum class PositionLayout {
  AnMovable,    // x is the AN array; the confidential array is held fixed
  ConfMovable,  // x is the confidential array; there is no AN array
  Joint,        // x = [confidential | AN], one ordered array split at conf_count
};

/// Scalar objective over a position vector, climbed by the optimizers below.
class PositionObjective {
 public:
  virtual ~PositionObjective() = default;
  [[nodiscard]] virtual double value(std::span<const double> x) const = 0;
  [[nodiscard]] virtual RealVector gradient(std::span<const double> x) const = 0;
};

/// Unclamped secrecy objective with both beamformers frozen.
class SecrecyObjective final : public PositionObjective {
 public:
  struct Setup {
    PositionLayout layout = PositionLayout::AnMovable;
    std::vector<double> fixed_conf_positions;  // AnMovable only
    std::size_t conf_count = 0;                // Joint only
    LinkGeometry bob;
    std::vector<LinkGeometry> eves;
    ComplexVector w_conf;
    ComplexVector w_an;  // empty for ConfMovable
    double noise_power = 1e-8;
  };

  explicit SecrecyObjective(Setup setup);

  [[nodiscard]] double value(std::span<const double> x) const override;
  [[nodiscard]] RealVector gradient(std::span<const double> x) const override;
  [[nodiscard]] SlotChannels channels(std::span<const double> x) const;
  [[nodiscard]] const Setup& setup() const { return s_; }

 private:
  struct Split {
    std::span<const double> conf;
    std::span<const double> an;
  };
  [[nodiscard]] Split split(std::span<const double> x) const;

  Setup s_;
  QuadraticForms q_conf_;
  QuadraticForms q_an_;
};

/// Exact chain-rule gradient of the unclamped secrecy objective in x.
RealVector secrecy_gradient(const SecrecyObjective& objective, std::span<const double> x);

/// Sequential clamp onto {0 <= x_1, x_r - x_{r-1} >= d_min, x_N <= L}. The
/// second form skips ArrayGeometry construction for the inner loop.
ArrayGeometry project(std::span<const double> raw, double d_min, double range_max);
std::vector<double> project_positions(std::span<const double> raw, double d_min, double range_max);

struct OptimizerConfig {
  std::size_t max_iterations = 500;
  double step = 1e-6;  // delta_0, meters per unit gradient
  double momentum = 0.9;  // zeta_0
  double up_factor = 1.05;
  double down_factor = 0.7;
  double velocity_damp = 0.5;
  double velocity_decay = 0.1;
  double momentum_cap = 0.95;
  std::size_t window = 5;
  double rate_tol = 1e-6;  // stall: range of the last `window` rates below this

  void validate() const;
};

struct OptimizerState {
  std::vector<double> positions;
  RealVector velocity;
  double momentum = 0.9;
  double step = 1e-6;
  std::size_t iteration = 0;
  double best_rate = 0.0;
  std::vector<double> best_positions;
  std::deque<double> recent;  // trailing window of rates
  double d_min = 0.0;
  double range_max = 0.0;

  /// Projects `start`, zeroes the velocity, seeds step and momentum from cfg.
  static OptimizerState init(const ArrayGeometry& start, const OptimizerConfig& cfg);
};

struct TraceRow {
  std::size_t iteration = 0;
  double rate = 0.0;
  double best = 0.0;
  double step = 0.0;
  double momentum = 0.0;
  double velocity_norm = 0.0;
};

struct OptimizeResult {
  ArrayGeometry positions;  // best seen
  double best_rate = 0.0;
  std::vector<TraceRow> trace;  // row 0 is the starting point
  std::size_t iterations = 0;
};

/// Projected gradient ascent with Nesterov look-ahead and adaptive step and momentum.
OptimizeResult nmpga_optimize(OptimizerState& state, const PositionObjective& objective,
                              const OptimizerConfig& cfg);

/// Fixed-step projected gradient ascent without momentum.
OptimizeResult pga_optimize(OptimizerState& state, const PositionObjective& objective,
                            const OptimizerConfig& cfg);

enum class PositionMethod { Nmpga, Pga };

OptimizeResult optimize_positions(PositionMethod method, OptimizerState& state,
                                  const PositionObjective& objective, const OptimizerConfig& cfg);

/// Uniformly distributed feasible positions: sorted draws on [0, L - (N-1) d_min] plus r d_min.
std::vector<double> random_feasible_positions(std::size_t n, double d_min, double range_max,
                                              std::mt19937_64& rng);

/// x_r = r L / (N-1): the array stretched over the whole range.
std::vector<double> spread_positions(std::size_t n, double d_min, double range_max);

/// Runs from `start`, then `restarts` more runs (the spread array first,
/// then random feasible draws seeded by `seed`) and keeps the best. The
/// returned trace is the one of the first run.
OptimizeResult multistart_optimize(PositionMethod method, const ArrayGeometry& start,
                                   const PositionObjective& objective, const OptimizerConfig& cfg,
                                   std::size_t restarts, std::uint64_t seed);

/// First iteration (trace index) whose best-so-far reaches `fraction` of the final best.
std::size_t iterations_to_fraction(const std::vector<TraceRow>& trace, double fraction);

}  // namespace fmasec

#endif  // FMASEC_POSITIONER_HPP
