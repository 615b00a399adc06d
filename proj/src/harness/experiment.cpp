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

#include "fmasec/harness/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

namespace fmasec {

std::string_view sweep_kind_name(SweepKind k) {
  switch (k) {
    case SweepKind::Noise: return "noise";
    case SweepKind::Alpha: return "alpha";
    case SweepKind::Angle: return "angle";
  }
  return "?";
}

SweepKind parse_sweep_kind(std::string_view name) {
  if (name == "noise") return SweepKind::Noise;
  if (name == "alpha") return SweepKind::Alpha;
  if (name == "angle") return SweepKind::Angle;
  throw std::invalid_argument("unknown sweep '" + std::string(name) + "' (expected noise, alpha or angle)");
}

const ArmRun* RunReport::find(Arm arm) const {
  for (const auto& r : runs)
    if (r.arm == arm) return &r;
  return nullptr;
}

double RunReport::average_rate(Arm arm) const {
  const auto* run = find(arm);
  if (run == nullptr) throw std::invalid_argument("arm '" + std::string(arm_name(arm)) + "' was not run");
  std::vector<double> rates;
  for (const auto& r : run->results) rates.push_back(r.best_rate);
  return average_secrecy_rate(rates);
}

AoConfig arm_config(const Scenario& scn, Arm arm) {
  AoConfig cfg = scn.ao;
  cfg.seed = sub_seed(scn.seed, "restarts/" + std::string(arm_name(arm)));
  return cfg;
}

std::vector<Arm> parse_arm_list(std::string_view csv) {
  std::vector<Arm> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto item = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
    if (!item.empty()) {
      const Arm a = parse_arm(item);
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("no arms selected");
  return out;
}

namespace {

double gain_db(const ComplexVector& steering, const ComplexVector& w) { return to_db(beam_gain(steering, w)); }

SlotSummary summarize(const AoResult& r, const SlotProblem& slot, std::size_t t) {
  SlotSummary s;
  s.arm = r.arm;
  s.slot = t + 1;
  s.rate = r.best_rate;
  s.objective = r.best_objective;
  s.iterations = r.iterations;
  s.stagnated = r.stagnated;
  s.conf_positions = r.conf_positions;
  s.an_positions = r.an_positions;
  const auto ch = result_channels(r, slot);
  const bool an = ch.has_an() && r.w_ma.weights.size() > 0;
  s.conf_bob_db = gain_db(ch.conf_bob, r.w_fpa.weights);
  s.an_bob_db = an ? gain_db(ch.an_bob, r.w_ma.weights) : to_db(0.0);
  for (std::size_t i = 0; i < ch.eve_count(); ++i) {
    s.conf_eve_db.push_back(gain_db(ch.conf_eves[i], r.w_fpa.weights));
    s.an_eve_db.push_back(an ? gain_db(ch.an_eves[i], r.w_ma.weights) : to_db(0.0));
  }
  return s;
}

PatternRecord pattern(const AoResult& r, const SlotProblem& slot, std::size_t t, std::size_t samples) {
  PatternRecord p;
  p.arm = r.arm;
  p.slot = t + 1;
  const auto conf = ArrayGeometry::movable(r.conf_positions, slot.d_min, slot.range_max);
  for (const auto& s : pattern_sweep(conf, slot.bob, r.w_fpa.weights, samples)) {
    p.theta.push_back(s.theta);
    p.conf_db.push_back(s.gain_db);
  }
  if (!r.an_positions.empty() && r.w_ma.weights.size() > 0) {
    const auto an = ArrayGeometry::movable(r.an_positions, slot.d_min, slot.range_max);
    for (const auto& s : pattern_sweep(an, slot.bob, r.w_ma.weights, samples)) p.an_db.push_back(s.gain_db);
  }
  return p;
}

std::vector<double> initial_movable(const AoResult& r, double d_min) {
  std::vector<double> x(r.movable_positions.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i) * d_min;
  return x;
}

std::vector<double> schedule_rates(const std::vector<AoResult>& rs) {
  std::vector<double> out;
  for (const auto& r : rs) out.push_back(r.best_rate);
  return out;
}

}  // namespace

RunReport run_experiment(const Scenario& scn, const std::vector<Arm>& arms, const RunOptions& opt) {
  scn.validate();
  if (arms.empty()) throw std::invalid_argument("no arms selected");
  RunReport rep;
  rep.scenario = scn;
  rep.arms = arms;
  const auto slots = scn.slot_problems();

  std::vector<std::future<std::vector<AoResult>>> jobs;
  for (Arm a : arms)
    jobs.push_back(std::async(std::launch::async, [&scn, &slots, a] {
      return run_schedule(a, slots, arm_config(scn, a), scn.warm_start);
    }));
  for (std::size_t k = 0; k < arms.size(); ++k) rep.runs.push_back({arms[k], jobs[k].get()});

  for (const auto& run : rep.runs) {
    for (std::size_t t = 0; t < run.results.size(); ++t) {
      const auto& r = run.results[t];
      rep.summaries.push_back(summarize(r, slots[t], t));
      if (opt.patterns) rep.patterns.push_back(pattern(r, slots[t], t, scn.pattern_samples));
      for (const auto& it : r.trace) {
        const double rate = std::max({it.after_w_fpa, it.after_positions, it.after_w_ma, 0.0});
        rep.convergence.push_back({run.arm, t + 1, it.iteration, rate, std::max(it.best, 0.0)});
      }
      for (const auto& row : r.position_trace) rep.optimizer_trace.push_back({run.arm, t + 1, row});
      if (run.arm == Arm::FpaOnly) continue;
      const auto prev = (t == 0 || !scn.warm_start) ? initial_movable(r, scn.d_min)
                                                    : run.results[t - 1].movable_positions;
      for (std::size_t i = 0; i < r.movable_positions.size(); ++i)
        rep.displacement.push_back({run.arm, t + 1, i, std::abs(r.movable_positions[i] - prev[i])});
    }
  }

  if (opt.sweeps) {
    for (SweepKind k : {SweepKind::Noise, SweepKind::Alpha, SweepKind::Angle}) {
      auto rows = run_sweep(scn, k, arms);
      rep.sweeps.insert(rep.sweeps.end(), rows.begin(), rows.end());
    }
  }
  return rep;
}

std::vector<SweepRow> run_sweep(const Scenario& scn, SweepKind kind, const std::vector<Arm>& arms) {
  scn.validate();
  const std::vector<double>* values = nullptr;
  switch (kind) {
    case SweepKind::Noise: values = &scn.sweep.noise_powers; break;
    case SweepKind::Alpha: values = &scn.sweep.path_loss_exponents; break;
    case SweepKind::Angle: values = &scn.sweep.bob_angles; break;
  }

  auto point = [&scn, kind, &arms](double v) {
    Scenario s = scn;
    std::vector<SweepRow> rows;
    if (kind == SweepKind::Angle) {
      auto slot = s.slot_problem(s.sweep.angle_slot - 1);
      slot.bob.angle = v;
      for (Arm a : arms) {
        const auto r = run_arm(a, slot, arm_config(s, a));
        rows.push_back({kind, v, a, r.best_rate, {r.best_rate}});
      }
      return rows;
    }
    if (kind == SweepKind::Noise) s.noise_power = v;
    if (kind == SweepKind::Alpha) {
      s.path_loss_exponent = v;
      s.path_loss_enabled = true;
    }
    const auto slots = s.slot_problems();
    for (Arm a : arms) {
      const auto rates = schedule_rates(run_schedule(a, slots, arm_config(s, a), s.warm_start));
      rows.push_back({kind, v, a, average_secrecy_rate(rates), rates});
    }
    return rows;
  };

  std::vector<std::future<std::vector<SweepRow>>> jobs;
  for (double v : *values) jobs.push_back(std::async(std::launch::async, point, v));
  std::vector<SweepRow> out;
  for (auto& j : jobs) {
    auto rows = j.get();
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace fmasec
