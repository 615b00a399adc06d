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

#ifndef FMASEC_AO_HPP
#define FMASEC_AO_HPP

#include "fmasec/beamform.hpp"
#include "fmasec/geometry.hpp"
#include "fmasec/positioner.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace fmasec {

enum class Arm { Fma, FpaOnly, MaOnly };
enum class MaOnlyMode {
  Split,         // 2N movable elements: first N confidential at P_FPA, last N AN at P_MA
  Confidential,  // N movable elements, confidential beam only
};

std::string_view arm_name(Arm arm);  // "fma", "fpa", "ma"
Arm parse_arm(std::string_view name);
std::string_view position_method_name(PositionMethod m);
PositionMethod parse_position_method(std::string_view name);
std::string_view ma_only_mode_name(MaOnlyMode m);
MaOnlyMode parse_ma_only_mode(std::string_view name);

inline constexpr std::size_t kNoStagnationLimit = std::numeric_limits<std::size_t>::max();

struct AoConfig {
  std::size_t max_iterations = 1500;
  double rate_tol = 1e-6;  // bps/Hz
  std::size_t stagnation_limit = 10;
  bool stagnation_enabled = true;
  PositionMethod position_method = PositionMethod::Nmpga;
  OptimizerConfig nmpga{};
  OptimizerConfig pga = default_pga();
  MaOnlyMode ma_only_mode = MaOnlyMode::Split;
  PositionMethod ma_only_method = PositionMethod::Pga;
  std::size_t position_restarts = 0;  // extra multistart runs per position step
  std::uint64_t seed = 0;             // feeds the restart draws
  bool update_w_fpa = true;
  bool update_positions = true;
  bool update_w_ma = true;

  static OptimizerConfig default_pga();
  void validate() const;
};

/// Everything one AO run needs for a single time slot.
struct SlotProblem {
  LinkGeometry bob;
  std::vector<LinkGeometry> eves;
  double noise_power = 1e-8;
  std::size_t n = 5;
  double p_fpa = 5.0;
  double p_ma = 1.0;
  double d_min = 0.0254;
  double range_max = 0.508;
  std::vector<double> initial_positions;  // movable start; empty selects uniform d_min spacing

  void validate() const;
};

struct AoIteration {
  std::size_t iteration = 0;
  double after_w_fpa = 0.0;      // unclamped objective after each block
  double after_positions = 0.0;
  double after_w_ma = 0.0;
  double best = 0.0;             // best-so-far objective
};

struct AoResult {
  Arm arm = Arm::Fma;
  Beamformer w_fpa;  // confidential beamformer
  Beamformer w_ma;   // AN beamformer; empty weights when the arm has none
  std::vector<double> conf_positions;
  std::vector<double> an_positions;
  std::vector<double> movable_positions;  // the vector the position step optimizes
  double best_objective = 0.0;            // unclamped
  double best_rate = 0.0;                 // clamped, equals secrecy_rate of the stored triple
  std::size_t iterations = 0;
  bool stagnated = false;
  std::vector<AoIteration> trace;
  std::vector<TraceRow> position_trace;  // inner optimizer rows across all AO iterations
};

/// Recompute the stored triple's channels.
SlotChannels result_channels(const AoResult& r, const SlotProblem& slot);

/// FMA co-design: confidential beam on the fixed array, AN on the movable array.
AoResult ao_solve_slot(const SlotProblem& slot, const AoConfig& cfg);

/// Both arrays fixed at the uniform grid; alternate the two closed forms.
AoResult run_fpa_only(const SlotProblem& slot, const AoConfig& cfg);

/// All elements movable, positions by the MA-Only method (fixed-step PGA by default).
AoResult run_ma_only(const SlotProblem& slot, const AoConfig& cfg);

AoResult run_arm(Arm arm, const SlotProblem& slot, const AoConfig& cfg);

/// Slots in order. With warm_start, slot t+1 starts from slot t's movable positions.
std::vector<AoResult> run_schedule(Arm arm, const std::vector<SlotProblem>& slots, const AoConfig& cfg,
                                   bool warm_start);

}  // namespace fmasec

#endif  // FMASEC_AO_HPP
