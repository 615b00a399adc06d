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

#ifndef FMASEC_HARNESS_EXPERIMENT_HPP
#define FMASEC_HARNESS_EXPERIMENT_HPP

#include "fmasec/ao.hpp"
#include "fmasec/harness/scenario.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace fmasec {

/// One (arm, slot) outcome with the gains in dB toward every receiver.
struct SlotSummary {
  Arm arm = Arm::Fma;
  std::size_t slot = 1;  // 1-based
  double rate = 0.0;     // bps/Hz, clamped
  double objective = 0.0;
  std::size_t iterations = 0;
  bool stagnated = false;
  double conf_bob_db = 0.0;
  double an_bob_db = 0.0;  // kGainFloor in dB when the arm sends no AN
  std::vector<double> conf_eve_db;
  std::vector<double> an_eve_db;
  std::vector<double> conf_positions;
  std::vector<double> an_positions;
};

struct PatternRecord {
  Arm arm = Arm::Fma;
  std::size_t slot = 1;
  std::vector<double> theta;
  std::vector<double> conf_db;
  std::vector<double> an_db;  // empty when the arm sends no AN
};

struct ConvergenceRow {
  Arm arm = Arm::Fma;
  std::size_t slot = 1;
  std::size_t iteration = 0;  // AO iteration, 1-based
  double rate = 0.0;          // best of the three block evaluations, clamped
  double best = 0.0;          // running best, clamped
};

struct OptimizerTraceRow {
  Arm arm = Arm::Fma;
  std::size_t slot = 1;
  TraceRow row;
};

/// |x[t] - x[t-1]| per antenna; slot 1 is measured from the initial array.
struct DisplacementRow {
  Arm arm = Arm::Fma;
  std::size_t slot = 1;
  std::size_t antenna = 0;
  double displacement = 0.0;  // m
};

enum class SweepKind { Noise, Alpha, Angle };
std::string_view sweep_kind_name(SweepKind k);  // "noise", "alpha", "angle"
SweepKind parse_sweep_kind(std::string_view name);

struct SweepRow {
  SweepKind kind = SweepKind::Noise;
  double value = 0.0;
  Arm arm = Arm::Fma;
  double rate = 0.0;  // slot average for noise/alpha, the single slot for angle
  std::vector<double> slot_rates;
};

struct ArmRun {
  Arm arm = Arm::Fma;
  std::vector<AoResult> results;  // one per slot
};

struct RunReport {
  Scenario scenario;
  std::vector<Arm> arms;
  std::vector<ArmRun> runs;
  std::vector<SlotSummary> summaries;
  std::vector<PatternRecord> patterns;
  std::vector<ConvergenceRow> convergence;
  std::vector<OptimizerTraceRow> optimizer_trace;
  std::vector<DisplacementRow> displacement;
  std::vector<SweepRow> sweeps;

  [[nodiscard]] const ArmRun* find(Arm arm) const;
  [[nodiscard]] double average_rate(Arm arm) const;
};

struct RunOptions {
  bool sweeps = true;    // run the sweeps the scenario lists
  bool patterns = true;
};

/// Per-arm AO settings: the scenario's config with an arm-specific seed.
AoConfig arm_config(const Scenario& scn, Arm arm);

std::vector<Arm> parse_arm_list(std::string_view csv);  // "fma,fpa,ma"

RunReport run_experiment(const Scenario& scn, const std::vector<Arm>& arms, const RunOptions& opt = {});

/// Noise and alpha points re-run every slot and average; alpha points
/// switch path loss on. Angle points replace Bob's angle in `sweep.angle_slot`
/// and start fresh.
std::vector<SweepRow> run_sweep(const Scenario& scn, SweepKind kind, const std::vector<Arm>& arms);

}  // namespace fmasec

#endif  // FMASEC_HARNESS_EXPERIMENT_HPP
