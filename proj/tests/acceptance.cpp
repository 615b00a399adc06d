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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "fmasec/harness/experiment.hpp"
#include "fmasec/harness/export.hpp"
#include "fmasec/harness/oracle.hpp"
#include "fmasec/harness/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace fmasec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0.0 && secs >= time_limit_s) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  if (!o.pass) ++failures;
  std::printf("%s %s: %s (%s) [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

SlotProblem fresh_slot(const Scenario& s, std::size_t t) { return s.slot_problem(t); }

bool monotone(const AoResult& r) {
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    if (r.trace[i].best < r.trace[i - 1].best) return false;
  for (std::size_t i = 1; i < r.position_trace.size(); ++i)
    if (r.position_trace[i].best < r.position_trace[i - 1].best) return false;
  return true;
}

}  // namespace

int main() {
  const Scenario scn = reference_scenario();
  std::printf("acceptance: scenario '%s', seed %llu\n", scn.name.c_str(), static_cast<unsigned long long>(scn.seed));

  criterion("AC1", "analytic gradient vs central differences, 100 trials, rel err < 1e-5", 10.0, [&] {
    const auto r = gradient_oracle(scn, 100, sub_seed(scn.seed, "oracle/gradient"));
    return Outcome{r.max_relative_error < 1e-5,
                   fmt("max rel err %.3e", r.max_relative_error) + fmt(", observed order %.3f", r.observed_order)};
  });

  BeamformerOracleReport bf;
  criterion("AC2", "FPA closed form >= all 10000 probes on 20 instances", 30.0, [&] {
    bf = beamformer_oracle(scn, 20, 10000, sub_seed(scn.seed, "oracle/beamformer"));
    return Outcome{bf.fpa_ok(), fmt("violations %.0f", static_cast<double>(bf.fpa_violations)) +
                                    fmt(", min margin %.3e", bf.fpa_min_margin)};
  });

  criterion("AC3", "MA closed form >= 0.95 x best of 10000 probes on 20 instances", 0.0, [&] {
    return Outcome{bf.ma_ok(), fmt("min ratio %.3e", bf.ma_min_ratio) +
                                   fmt(", %.0f/20 instances pass", static_cast<double>(bf.ma_passing)) +
                                   fmt("; with w_conf from the FPA step: min ratio %.3e", bf.ma_min_ratio_ao) +
                                   fmt(", %.0f/20 pass", static_cast<double>(bf.ma_passing_ao))};
  });

  criterion("AC4", "N=2 NMPGA within 2% of the 0.05 lambda grid optimum, 10 draws", 0.0, [&] {
    const auto r = grid_oracle(scn, 10, 8, sub_seed(scn.seed, "oracle/grid"));
    return Outcome{r.passed(), fmt("min ratio %.6f", r.min_ratio())};
  });

  AoResult nm;
  AoResult pg;
  criterion("AC5", "slot 3 plateau >= 29.5 bps/Hz, path loss off, P_MA = 1 W", 60.0, [&] {
    nm = ao_solve_slot(fresh_slot(scn, 2), scn.ao);
    return Outcome{nm.best_rate >= 29.5, fmt("rate %.4f bps/Hz", nm.best_rate)};
  });

  criterion("AC6", "NMPGA reaches 99% of its plateau in fewer iterations than PGA", 0.0, [&] {
    AoConfig cfg = scn.ao;
    cfg.position_method = PositionMethod::Pga;
    pg = ao_solve_slot(fresh_slot(scn, 2), cfg);
    const auto a = iterations_to_fraction(nm.position_trace, 0.99);
    const auto b = iterations_to_fraction(pg.position_trace, 0.99);
    return Outcome{a < b, fmt("NMPGA %.0f", static_cast<double>(a)) + fmt(" (plateau %.4f)", nm.best_rate) +
                              fmt(" vs PGA %.0f", static_cast<double>(b)) + fmt(" (plateau %.4f)", pg.best_rate)};
  });

  criterion("AC7", "slot 1 ordering FMA > MA-Only > FPA-Only with 5% margins", 0.0, [&] {
    const auto slot = fresh_slot(scn, 0);
    const double f = run_arm(Arm::Fma, slot, arm_config(scn, Arm::Fma)).best_rate;
    const double m = run_arm(Arm::MaOnly, slot, arm_config(scn, Arm::MaOnly)).best_rate;
    const double p = run_arm(Arm::FpaOnly, slot, arm_config(scn, Arm::FpaOnly)).best_rate;
    return Outcome{f > 1.05 * m && m > 1.05 * p,
                   fmt("FMA %.3f", f) + fmt(", MA-Only %.3f", m) + fmt(", FPA-Only %.3f", p)};
  });

  RunOptions no_sweeps;
  no_sweeps.sweeps = false;
  no_sweeps.patterns = false;
  RunReport full;
  criterion("AC8", "AN gain <= -100 dB at Bob and >= 0 dB at each Eve, every slot", 0.0, [&] {
    full = run_experiment(scn, {Arm::Fma, Arm::FpaOnly, Arm::MaOnly}, no_sweeps);
    bool ok = true;
    double worst_bob = -1e300;
    double worst_eve = 1e300;
    for (const auto& s : full.summaries) {
      if (s.arm != Arm::Fma) continue;
      worst_bob = std::max(worst_bob, s.an_bob_db);
      for (double e : s.an_eve_db) worst_eve = std::min(worst_eve, e);
    }
    ok = worst_bob <= -100.0 && worst_eve >= 0.0;
    return Outcome{ok, fmt("highest Bob AN %.2f dB", worst_bob) + fmt(", lowest Eve AN %.2f dB", worst_eve)};
  });

  criterion("AC9", "projection idempotent and feasible on 10000 raw vectors", 0.0, [&] {
    std::mt19937_64 rng(sub_seed(scn.seed, "acceptance/projection"));
    std::uniform_real_distribution<double> u(-2.0 * scn.range_max, 3.0 * scn.range_max);
    std::uniform_int_distribution<int> pick(0, 4);
    std::size_t violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<double> raw(scn.n);
      for (auto& v : raw) {
        switch (pick(rng)) {
          case 0: v = -1e9; break;  // saturate low
          case 1: v = 1e9; break;   // saturate high
          case 2: v = scn.range_max; break;
          default: v = u(rng); break;
        }
      }
      const auto p = project_positions(raw, scn.d_min, scn.range_max);
      if (project_positions(p, scn.d_min, scn.range_max) != p) ++violations;
      if (p.front() < 0.0 || p.back() > scn.range_max) ++violations;
      for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] - p[i - 1] < scn.d_min * (1.0 - 1e-12)) ++violations;
    }
    return Outcome{violations == 0, fmt("%.0f violations", static_cast<double>(violations))};
  });

  std::vector<SweepRow> noise;
  criterion("AC10", "noise 1e-7..1e-6 W: FMA retention >= 75% and FMA >= both baselines", 0.0, [&] {
    Scenario s = scn;
    s.sweep.noise_powers.clear();
    for (int k = 1; k <= 10; ++k) s.sweep.noise_powers.push_back(k * 1e-7);
    noise = run_sweep(s, SweepKind::Noise, {Arm::Fma, Arm::FpaOnly, Arm::MaOnly});
    double first = 0.0;
    double last = 0.0;
    bool dominates = true;
    double tightest = 1e300;
    for (double v : s.sweep.noise_powers) {
      double f = 0.0, p = 0.0, m = 0.0;
      for (const auto& r : noise) {
        if (r.value != v) continue;
        (r.arm == Arm::Fma ? f : r.arm == Arm::FpaOnly ? p : m) = r.rate;
      }
      if (v == s.sweep.noise_powers.front()) first = f;
      if (v == s.sweep.noise_powers.back()) last = f;
      dominates = dominates && f >= p && f >= m;
      tightest = std::min(tightest, f - std::max(p, m));
    }
    const double retention = last / first;
    return Outcome{retention >= 0.75 && dominates,
                   fmt("retention %.1f%%", 100.0 * retention) + fmt(", smallest FMA lead %.4f bps/Hz", tightest)};
  });

  criterion("AC11", "best-so-far traces non-decreasing; identical reruns bit-identical", 0.0, [&] {
    bool mono = monotone(nm) && monotone(pg);
    for (const auto& run : full.runs)
      for (const auto& r : run.results) mono = mono && monotone(r);
    const auto again = run_experiment(scn, {Arm::Fma, Arm::FpaOnly, Arm::MaOnly}, no_sweeps);
    bool same = report_json(again) == report_json(full);
    for (std::size_t k = 0; k < full.runs.size(); ++k)
      for (std::size_t t = 0; t < full.runs[k].results.size(); ++t)
        same = same && full.runs[k].results[t].best_rate == again.runs[k].results[t].best_rate;
    return Outcome{mono && same, std::string("monotone ") + (mono ? "yes" : "no") + ", reproducible " +
                                     (same ? "yes" : "no")};
  });

  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
