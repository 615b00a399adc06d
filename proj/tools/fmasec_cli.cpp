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
#include "fmasec/harness/export.hpp"
#include "fmasec/harness/oracle.hpp"
#include "fmasec/harness/scenario.hpp"

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOracle = 3;

void configure_logging() {
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("FMASEC_LOG")) {
    const auto lvl = spdlog::level::from_str(env);
    // from_str maps unknown names to "off"; only honour an explicit "off".
    if (lvl != spdlog::level::off || std::string(env) == "off") spdlog::set_level(lvl);
  }
}

fmasec::Scenario scenario_or_default(const std::string& path) {
  if (path.empty()) return fmasec::reference_scenario();
  return fmasec::load_scenario(path);
}

void print_rates(const fmasec::RunReport& rep) {
  std::printf("%-6s %-4s %12s %10s %12s\n", "arm", "slot", "rate_bps_hz", "ao_iters", "an_bob_db");
  for (const auto& s : rep.summaries)
    std::printf("%-6s %-4zu %12.6f %10zu %12.2f\n", std::string(fmasec::arm_name(s.arm)).c_str(), s.slot, s.rate,
                s.iterations, s.an_bob_db);
  for (const auto& run : rep.runs)
    std::printf("average %-6s %.6f bps/Hz\n", std::string(fmasec::arm_name(run.arm)).c_str(),
                rep.average_rate(run.arm));
}

void print_sweep(const std::vector<fmasec::SweepRow>& rows) {
  std::printf("%-8s %14s %-6s %12s\n", "sweep", "value", "arm", "rate_bps_hz");
  for (const auto& r : rows)
    std::printf("%-8s %14.6g %-6s %12.6f\n", std::string(fmasec::sweep_kind_name(r.kind)).c_str(), r.value,
                std::string(fmasec::arm_name(r.arm)).c_str(), r.rate);
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Joint fixed/movable antenna secrecy beamforming experiments"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string arms_csv = "fma,fpa,ma";
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  bool no_sweeps = false;
  bool no_patterns = false;

  auto* run = app.add_subcommand("run", "Run the AO arms on a scenario and export CSV/JSON");
  run->add_option("scenario", scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--arms", arms_csv, "Comma-separated arms: fma, fpa, ma");
  run->add_option("--out", out_dir, "Output directory for CSV and report.json");
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_flag("--no-sweeps", no_sweeps, "Skip the sweeps listed in the scenario");
  run->add_flag("--no-patterns", no_patterns, "Skip beam-pattern sampling");

  std::string oracle_kind;
  std::size_t trials = 0;
  std::size_t probes = 10000;
  std::size_t restarts = 8;
  auto* oracle = app.add_subcommand("oracle", "Run a validation oracle");
  oracle->add_option("kind", oracle_kind, "gradient, beamformer or grid")
      ->required()
      ->check(CLI::IsMember({"gradient", "beamformer", "grid"}));
  oracle->add_option("--trials", trials, "Random instances (default 100 / 20 / 10)");
  oracle->add_option("--probes", probes, "Random probes per beamformer instance");
  oracle->add_option("--restarts", restarts, "Extra NMPGA starts for the grid oracle");
  oracle->add_option("--scenario", scenario_path, "Scenario supplying dimensions (default: reference)");
  oracle->add_option("--seed", seed, "Override the scenario seed");

  std::string sweep_kind;
  auto* sweep = app.add_subcommand("sweep", "Run one parameter sweep");
  sweep->add_option("kind", sweep_kind, "noise, alpha or angle")
      ->required()
      ->check(CLI::IsMember({"noise", "alpha", "angle"}));
  sweep->add_option("scenario", scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--arms", arms_csv, "Comma-separated arms: fma, fpa, ma");
  sweep->add_option("--out", out_dir, "Output directory for sweep_<kind>.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    auto scn = scenario_or_default(scenario_path);
    if (seed) scn.seed = *seed;

    if (*run) {
      const auto arms = fmasec::parse_arm_list(arms_csv);
      spdlog::info("scenario '{}': {} slots, {} arms", scn.name, scn.slots, arms.size());
      fmasec::RunOptions opt;
      opt.sweeps = !no_sweeps;
      opt.patterns = !no_patterns;
      const auto rep = fmasec::run_experiment(scn, arms, opt);
      print_rates(rep);
      if (!rep.sweeps.empty()) print_sweep(rep.sweeps);
      if (!out_dir.empty()) {
        const auto files = fmasec::export_report(rep, out_dir);
        spdlog::info("wrote {} files to {}", files.size(), out_dir);
      }
      return kExitOk;
    }

    if (*oracle) {
      const auto root = fmasec::sub_seed(scn.seed, "oracle/" + oracle_kind);
      bool ok = false;
      if (oracle_kind == "gradient") {
        const auto r = fmasec::gradient_oracle(scn, trials ? trials : 100, root);
        std::printf("gradient: %zu trials, max relative error %.3e (tol %.0e), observed order %.3f\n", r.trials,
                    r.max_relative_error, r.tolerance, r.observed_order);
        ok = r.passed();
      } else if (oracle_kind == "beamformer") {
        const auto r = fmasec::beamformer_oracle(scn, trials ? trials : 20, probes, root);
        std::printf("beamformer: %zu instances x %zu probes\n", r.instances, r.probes);
        std::printf("  closed form vs best probe: min margin %.3e, violations %zu\n", r.fpa_min_margin,
                    r.fpa_violations);
        std::printf("  closed form / best probe, random w_conf: min ratio %.3e, %zu/%zu >= %.2f\n",
                    r.ma_min_ratio, r.ma_passing, r.instances, r.ma_threshold);
        std::printf("  closed form / best probe, w_conf from FPA step: min ratio %.3e, %zu/%zu >= %.2f\n",
                    r.ma_min_ratio_ao, r.ma_passing_ao, r.instances, r.ma_threshold);
        std::printf("  pencil vs direct eigenvalue: max rel diff %.3e\n", r.eig_max_rel_diff);
        ok = r.passed();
      } else {
        const auto r = fmasec::grid_oracle(scn, trials ? trials : 10, restarts, root);
        for (std::size_t t = 0; t < r.trials.size(); ++t)
          std::printf("grid trial %zu: grid %.6f nmpga %.6f ratio %.6f\n", t, r.trials[t].grid_best,
                      r.trials[t].optimizer_best, r.trials[t].ratio());
        std::printf("grid: min ratio %.6f (need >= %.2f)\n", r.min_ratio(), 1.0 - r.tolerance);
        ok = r.passed();
      }
      std::printf("%s\n", ok ? "PASS" : "FAIL");
      return ok ? kExitOk : kExitOracle;
    }

    if (*sweep) {
      const auto kind = fmasec::parse_sweep_kind(sweep_kind);
      const auto rows = fmasec::run_sweep(scn, kind, fmasec::parse_arm_list(arms_csv));
      print_sweep(rows);
      if (!out_dir.empty()) {
        fmasec::RunReport rep;
        rep.scenario = scn;
        rep.sweeps = rows;
        std::filesystem::create_directories(out_dir);
        const auto path = std::filesystem::path(out_dir) / ("sweep_" + sweep_kind + ".csv");
        fmasec::write_file_atomic(path, fmasec::to_csv(fmasec::sweep_table(rep, kind)));
        spdlog::info("wrote {}", path.string());
      }
      return kExitOk;
    }
  } catch (const fmasec::ScenarioError& e) {
    spdlog::error("{}", e.what());
    return kExitInvalid;
  } catch (const fmasec::GeometryError& e) {
    spdlog::error("{}", e.what());
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    spdlog::error("{}", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitError;
  }
  return kExitError;
}
