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

#include "fmasec/ao.hpp"

#include "fmasec/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fmasec {

std::string_view arm_name(Arm arm) {
  switch (arm) {
    case Arm::Fma: return "fma";
    case Arm::FpaOnly: return "fpa";
    case Arm::MaOnly: return "ma";
  }
  return "?";
}

Arm parse_arm(std::string_view name) {
  if (name == "fma") return Arm::Fma;
  if (name == "fpa") return Arm::FpaOnly;
  if (name == "ma") return Arm::MaOnly;
  throw std::invalid_argument("unknown arm '" + std::string(name) + "' (expected fma, fpa or ma)");
}

std::string_view position_method_name(PositionMethod m) {
  return m == PositionMethod::Nmpga ? "nmpga" : "pga";
}

PositionMethod parse_position_method(std::string_view name) {
  if (name == "nmpga") return PositionMethod::Nmpga;
  if (name == "pga") return PositionMethod::Pga;
  throw std::invalid_argument("unknown position optimizer '" + std::string(name) + "'");
}

std::string_view ma_only_mode_name(MaOnlyMode m) {
  return m == MaOnlyMode::Split ? "split" : "confidential";
}

MaOnlyMode parse_ma_only_mode(std::string_view name) {
  if (name == "split") return MaOnlyMode::Split;
  if (name == "confidential") return MaOnlyMode::Confidential;
  throw std::invalid_argument("unknown ma_only_mode '" + std::string(name) + "'");
}

OptimizerConfig AoConfig::default_pga() {
  OptimizerConfig c;
  c.step = 1e-5;
  c.momentum = 0.0;
  return c;
}

void AoConfig::validate() const {
  if (max_iterations == 0) throw std::invalid_argument("AO max_iterations must be > 0");
  if (!(rate_tol > 0.0)) throw std::invalid_argument("AO rate tolerance must be > 0");
  if (stagnation_limit == 0) throw std::invalid_argument("stagnation limit must be > 0");
  nmpga.validate();
  pga.validate();
}

void SlotProblem::validate() const {
  if (eves.empty()) throw std::invalid_argument("slot needs at least one Eve");
  bob.validate();
  for (const auto& e : eves) e.validate();
  if (!std::isfinite(noise_power) || noise_power <= 0.0)
    throw std::invalid_argument("noise power must be finite and > 0");
  if (!(p_fpa > 0.0) || !(p_ma > 0.0)) throw std::invalid_argument("power budgets must be > 0");
  check_array_feasible(n, d_min, range_max);
}

namespace {

enum class Moves { None, An, Conf, Joint };

struct Layout {
  Moves moves = Moves::None;
  std::vector<double> conf;  // initial confidential positions
  std::vector<double> an;    // initial AN positions, empty when there is no AN array
  double p_conf = 0.0;
  double p_an = 0.0;
  PositionMethod method = PositionMethod::Nmpga;
};

std::vector<double> uniform_positions(std::size_t n, double d_min) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i) * d_min;
  return x;
}

std::vector<double> starting_positions(const SlotProblem& slot, std::size_t count) {
  if (slot.initial_positions.empty()) {
    check_array_feasible(count, slot.d_min, slot.range_max);
    return uniform_positions(count, slot.d_min);
  }
  if (slot.initial_positions.size() != count)
    throw std::invalid_argument("initial positions have " + std::to_string(slot.initial_positions.size()) +
                                " entries, expected " + std::to_string(count));
  // Validates order, spacing and range.
  const auto g = ArrayGeometry::movable(slot.initial_positions, slot.d_min, slot.range_max);
  return {g.positions().begin(), g.positions().end()};
}

class AoRun {
 public:
  AoRun(const SlotProblem& slot, const AoConfig& cfg, Arm arm, Layout layout)
      : slot_(slot), cfg_(cfg), arm_(arm), lay_(std::move(layout)) {
    conf_ = lay_.conf;
    an_ = lay_.an;
    w_conf_ = Beamformer::uniform(conf_.size(), lay_.p_conf);
    if (!an_.empty()) w_an_ = Beamformer::uniform(an_.size(), lay_.p_an);
    else w_an_ = {ComplexVector(), lay_.p_an};
  }

  AoResult solve() {
    double best = evaluate();
    store_best(best);
    std::size_t stag = 0;
    std::size_t it = 0;
    bool stagnated = false;
    for (it = 1; it <= cfg_.max_iterations; ++it) {
      const double best_before = best;
      AoIteration row;
      row.iteration = it;
      double r_i = -std::numeric_limits<double>::infinity();
      auto consider = [&](double v) {
        r_i = std::max(r_i, v);
        if (v > best) {
          best = v;
          store_best(v);
        }
        return v;
      };

      row.after_w_fpa = consider(cfg_.update_w_fpa ? step_w_conf() : evaluate());
      row.after_positions =
          consider(cfg_.update_positions && lay_.moves != Moves::None ? step_positions(best) : evaluate());
      row.after_w_ma = consider(cfg_.update_w_ma && !an_.empty() ? step_w_an() : evaluate());
      row.best = best;
      trace_.push_back(row);

      if (std::abs(r_i - best_before) < cfg_.rate_tol) break;
      if (best > best_before) {
        stag = 0;
      } else if (cfg_.stagnation_enabled && ++stag >= cfg_.stagnation_limit) {
        stagnated = true;
        break;
      }
    }

    AoResult out = best_;
    out.arm = arm_;
    out.iterations = std::min(it, cfg_.max_iterations);
    out.stagnated = stagnated;
    out.trace = std::move(trace_);
    out.position_trace = std::move(ptrace_);
    return out;
  }

 private:
  SlotChannels channels() const {
    return make_slot_channels(conf_, an_, slot_.bob, slot_.eves, slot_.noise_power);
  }

  double evaluate() const { return secrecy_objective(channels(), w_conf_.weights, w_an_.weights); }

  std::vector<double> movable() const {
    switch (lay_.moves) {
      case Moves::An: return an_;
      case Moves::Conf: return conf_;
      case Moves::Joint: {
        auto x = conf_;
        x.insert(x.end(), an_.begin(), an_.end());
        return x;
      }
      case Moves::None: break;
    }
    return {};
  }

  void store_best(double objective) {
    best_.w_fpa = w_conf_;
    best_.w_ma = w_an_;
    best_.conf_positions = conf_;
    best_.an_positions = an_;
    best_.movable_positions = movable();
    best_.best_objective = objective;
    best_.best_rate = objective > 0.0 ? objective : 0.0;
  }

  double step_w_conf() {
    w_conf_ = optimal_w_fpa(channels(), w_an_.weights, lay_.p_conf);
    return evaluate();
  }

  double step_w_an() {
    w_an_ = optimal_w_ma(channels(), w_conf_.weights, lay_.p_an);
    return evaluate();
  }

  double step_positions(double best_so_far) {
    SecrecyObjective::Setup s;
    s.bob = slot_.bob;
    s.eves = slot_.eves;
    s.noise_power = slot_.noise_power;
    s.w_conf = w_conf_.weights;
    s.w_an = w_an_.weights;
    switch (lay_.moves) {
      case Moves::An:
        s.layout = PositionLayout::AnMovable;
        s.fixed_conf_positions = conf_;
        break;
      case Moves::Conf: s.layout = PositionLayout::ConfMovable; break;
      case Moves::Joint:
        s.layout = PositionLayout::Joint;
        s.conf_count = conf_.size();
        break;
      case Moves::None: return evaluate();
    }
    const SecrecyObjective objective(std::move(s));
    const auto start = ArrayGeometry::movable(movable(), slot_.d_min, slot_.range_max);
    const auto& ocfg = lay_.method == PositionMethod::Nmpga ? cfg_.nmpga : cfg_.pga;
    const auto res = multistart_optimize(lay_.method, start, objective, ocfg, cfg_.position_restarts,
                                         cfg_.seed + position_steps_++);

    for (const auto& r : res.trace) {
      if (r.iteration == 0) continue;
      TraceRow row = r;
      row.iteration = ptrace_.size() + 1;
      running_best_ = std::max({running_best_, best_so_far, r.best});
      row.best = running_best_;
      ptrace_.push_back(row);
    }

    const auto x = res.positions.positions();
    switch (lay_.moves) {
      case Moves::An: an_.assign(x.begin(), x.end()); break;
      case Moves::Conf: conf_.assign(x.begin(), x.end()); break;
      case Moves::Joint:
        conf_.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(conf_.size()));
        an_.assign(x.begin() + static_cast<std::ptrdiff_t>(conf_.size()), x.end());
        break;
      case Moves::None: break;
    }
    return evaluate();
  }

  const SlotProblem& slot_;
  const AoConfig& cfg_;
  Arm arm_;
  Layout lay_;
  std::vector<double> conf_;
  std::vector<double> an_;
  Beamformer w_conf_;
  Beamformer w_an_;
  AoResult best_;
  std::vector<AoIteration> trace_;
  std::vector<TraceRow> ptrace_;
  double running_best_ = -std::numeric_limits<double>::infinity();
  std::uint64_t position_steps_ = 0;
};

}  // namespace

SlotChannels result_channels(const AoResult& r, const SlotProblem& slot) {
  return make_slot_channels(r.conf_positions, r.an_positions, slot.bob, slot.eves, slot.noise_power);
}

AoResult ao_solve_slot(const SlotProblem& slot, const AoConfig& cfg) {
  slot.validate();
  cfg.validate();
  Layout lay;
  lay.moves = Moves::An;
  lay.conf = uniform_positions(slot.n, slot.d_min);
  lay.an = starting_positions(slot, slot.n);
  lay.p_conf = slot.p_fpa;
  lay.p_an = slot.p_ma;
  lay.method = cfg.position_method;
  return AoRun(slot, cfg, Arm::Fma, std::move(lay)).solve();
}

AoResult run_fpa_only(const SlotProblem& slot, const AoConfig& cfg) {
  slot.validate();
  cfg.validate();
  Layout lay;
  lay.moves = Moves::None;
  lay.conf = uniform_positions(slot.n, slot.d_min);
  lay.an = lay.conf;
  lay.p_conf = slot.p_fpa;
  lay.p_an = slot.p_ma;
  return AoRun(slot, cfg, Arm::FpaOnly, std::move(lay)).solve();
}

AoResult run_ma_only(const SlotProblem& slot, const AoConfig& cfg) {
  slot.validate();
  cfg.validate();
  Layout lay;
  lay.p_conf = slot.p_fpa;
  lay.p_an = slot.p_ma;
  lay.method = cfg.ma_only_method;
  if (cfg.ma_only_mode == MaOnlyMode::Split) {
    lay.moves = Moves::Joint;
    auto x = starting_positions(slot, 2 * slot.n);
    lay.conf.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(slot.n));
    lay.an.assign(x.begin() + static_cast<std::ptrdiff_t>(slot.n), x.end());
  } else {
    lay.moves = Moves::Conf;
    lay.conf = starting_positions(slot, slot.n);
  }
  return AoRun(slot, cfg, Arm::MaOnly, std::move(lay)).solve();
}

AoResult run_arm(Arm arm, const SlotProblem& slot, const AoConfig& cfg) {
  switch (arm) {
    case Arm::Fma: return ao_solve_slot(slot, cfg);
    case Arm::FpaOnly: return run_fpa_only(slot, cfg);
    case Arm::MaOnly: return run_ma_only(slot, cfg);
  }
  throw std::logic_error("unknown arm");
}

std::vector<AoResult> run_schedule(Arm arm, const std::vector<SlotProblem>& slots, const AoConfig& cfg,
                                   bool warm_start) {
  std::vector<AoResult> out;
  out.reserve(slots.size());
  std::vector<double> carry;
  for (const auto& s : slots) {
    SlotProblem slot = s;
    if (warm_start && !carry.empty()) slot.initial_positions = carry;
    out.push_back(run_arm(arm, slot, cfg));
    carry = out.back().movable_positions;
  }
  return out;
}

}  // namespace fmasec
