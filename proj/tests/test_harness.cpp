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

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fmasec;

namespace {

std::filesystem::path bundled() { return std::filesystem::path(FMASEC_SOURCE_DIR) / "data" / "paper_table2.scenario"; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("fmasec_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

Scenario one_slot() {
  auto s = reference_scenario();
  s.slots = 1;
  s.theta_bob.resize(1);
  for (auto& e : s.theta_eve) e.resize(1);
  s.sweep = {};
  s.pattern_samples = 64;
  return s;
}

}  // namespace

TEST_CASE("bundled scenario carries the table constants") {
  const auto s = load_scenario(bundled());
  CHECK(s.n == 5);
  CHECK(s.eves == 2);
  CHECK(s.p_fpa == 5.0);
  CHECK(s.p_ma == 1.0);
  CHECK(s.wavelength == 0.0508);
  CHECK(s.noise_power == 1e-8);
  CHECK(s.range_max == doctest::Approx(10 * 0.0508));
  CHECK(s.d_min == doctest::Approx(0.0508 / 2));
  CHECK(s.path_loss_exponent == 2.0);
  CHECK(s.distance == 100.0);
  CHECK(s.slots == 4);
  CHECK_FALSE(s.path_loss_enabled);
  const auto p = reference_scenario();
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(s.theta_bob[t] == doctest::Approx(p.theta_bob[t]));
    CHECK(s.theta_eve[0][t] == doctest::Approx(p.theta_eve[0][t]));
    CHECK(s.theta_eve[1][t] == doctest::Approx(p.theta_eve[1][t]));
  }
}

TEST_CASE("empty scenario is a parse error at position 0") {
  try {
    (void)parse_scenario("  \n# only a comment\n");
    FAIL("expected an error");
  } catch (const ScenarioError& e) {
    CHECK(e.line() == 0);
    CHECK(std::string(e.what()).find("position 0") != std::string::npos);
  }
}

TEST_CASE("out-of-range angle names the slot and receiver") {
  auto text = format_scenario(reference_scenario());
  text += "";
  const auto pos = text.find("theta_eve2 = [");
  REQUIRE(pos != std::string::npos);
  const auto end = text.find('\n', pos);
  text.replace(pos, end - pos, "theta_eve2 = [1, 2, 3.5, 1]");
  try {
    (void)parse_scenario(text);
    FAIL("expected an error");
  } catch (const ScenarioError& e) {
    CHECK(e.field() == "theta_eve2");
    const std::string msg = e.what();
    CHECK(msg.find("slot 3") != std::string::npos);
    CHECK(msg.find("Eve 2") != std::string::npos);
  }
}

TEST_CASE("unknown keys and bad values are named") {
  const auto base = format_scenario(reference_scenario());
  try {
    (void)parse_scenario(base + "colour = blue\n");
    FAIL("expected an error");
  } catch (const ScenarioError& e) {
    CHECK(e.field() == "colour");
    CHECK(e.line() > 0);
  }
  CHECK_THROWS_AS(parse_scenario(base + "slots = 4\n"), ScenarioError);  // duplicate
  CHECK_THROWS_AS(parse_scenario("n = five\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("just words\n"), ScenarioError);
}

TEST_CASE("infeasible array is a validation error on range_max") {
  auto s = reference_scenario();
  s.range_max = 0.05;
  try {
    s.validate();
    FAIL("expected an error");
  } catch (const ScenarioError& e) {
    CHECK(e.field() == "range_max");
  }
}

TEST_CASE("expressions over pi and lambda") {
  CHECK(evaluate_expression("10*lambda", 0.05) == doctest::Approx(0.5));
  CHECK(evaluate_expression("-(pi/2) + 2e-1", 1.0) == doctest::Approx(-kPi / 2 + 0.2));
  CHECK(evaluate_expression("2*(3+4)/7", 1.0) == doctest::Approx(2.0));
  CHECK_THROWS(evaluate_expression("2 +", 1.0));
  CHECK_THROWS(evaluate_expression("mu", 1.0));
}

TEST_CASE("format and parse round trip every field") {
  auto s = reference_scenario();
  s.ao.position_restarts = 3;
  s.ao.ma_only_mode = MaOnlyMode::Confidential;
  s.seed = 18446744073709551615ULL;
  s.reference_loss = 1.25e-5;
  const auto back = parse_scenario(format_scenario(s));
  CHECK(format_scenario(back) == format_scenario(s));
  CHECK(back.seed == s.seed);
}

TEST_CASE("sub-seeds are deterministic and distinct") {
  CHECK(sub_seed(1, "a") == sub_seed(1, "a"));
  CHECK(sub_seed(1, "a") != sub_seed(1, "b"));
  CHECK(sub_seed(1, "a") != sub_seed(2, "a"));
}

TEST_CASE("single slot FPA-Only run: one result, one pattern pair") {
  const auto rep = run_experiment(one_slot(), {Arm::FpaOnly});
  REQUIRE(rep.runs.size() == 1);
  CHECK(rep.runs[0].results.size() == 1);
  REQUIRE(rep.patterns.size() == 1);
  CHECK(rep.patterns[0].conf_db.size() == 64);
  CHECK(rep.patterns[0].an_db.size() == 64);
  CHECK(rep.displacement.empty());
  CHECK(rep.sweeps.empty());
}

TEST_CASE("empty report exports header-only tables") {
  RunReport rep;
  rep.scenario = reference_scenario();
  const auto dir = scratch_dir("empty");
  const auto files = export_report(rep, dir);
  for (const char* f : {"rates_by_slot.csv", "convergence.csv", "positions.csv", "displacement.csv",
                        "sweep_noise.csv", "sweep_alpha.csv", "sweep_angle.csv"}) {
    const auto t = parse_csv(slurp(dir / f));
    CHECK(t.size() == 1);
  }
  CHECK(parse_csv(slurp(dir / "rates_by_slot.csv"))[0][2] == "rate_bps_hz");
  CHECK(parse_csv(slurp(dir / "positions.csv"))[0] == std::vector<std::string>{"slot", "antenna_index", "position_m"});
  CHECK(std::filesystem::exists(dir / "report.json"));
}

TEST_CASE("reference run export: shapes, finiteness, round trip, config echo") {
  RunOptions opt;
  opt.sweeps = false;
  auto scn = reference_scenario();
  scn.pattern_samples = 128;
  const auto rep = run_experiment(scn, {Arm::Fma, Arm::FpaOnly, Arm::MaOnly}, opt);
  const auto dir = scratch_dir("reference");
  export_report(rep, dir);

  const auto pos = parse_csv(slurp(dir / "positions.csv"));
  CHECK(pos.size() == 1 + 4 * 5);
  const auto& fma = rep.find(Arm::Fma)->results;
  for (std::size_t row = 1; row < pos.size(); ++row) {
    const auto slot = std::stoul(pos[row][0]) - 1;
    const auto idx = std::stoul(pos[row][1]);
    const double v = std::stod(pos[row][2]);
    CHECK(v == doctest::Approx(fma[slot].movable_positions[idx]).epsilon(1e-11));
    CHECK(format_float(v) == pos[row][2]);
  }

  const auto rates = parse_csv(slurp(dir / "rates_by_slot.csv"));
  CHECK(rates.size() == 1 + 3 * 4);
  for (std::size_t row = 1; row < rates.size(); ++row) {
    const auto& s = rep.summaries[row - 1];
    CHECK(std::stod(rates[row][2]) == doctest::Approx(s.rate).epsilon(1e-11));
  }

  const double floor_db = to_db(0.0);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".csv") continue;
    const auto t = parse_csv(slurp(entry.path()));
    for (std::size_t r = 1; r < t.size(); ++r) {
      CHECK(t[r].size() == t[0].size());
      for (std::size_t c = 0; c < t[r].size(); ++c) {
        if (t[0][c] == "arm" || t[0][c] == "array") continue;
        const double v = std::stod(t[r][c]);
        CHECK(std::isfinite(v));
        if (t[0][c].find("_db") != std::string::npos) CHECK(v >= floor_db);
      }
    }
  }
  CHECK(std::filesystem::exists(dir / "pattern_fma_4.csv"));
  CHECK(parse_csv(slurp(dir / "pattern_fma_4.csv")).size() == 129);
  CHECK(parse_csv(slurp(dir / "displacement.csv")).size() == 1 + 4 * 5 + 4 * 10);

  const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
  for (const char* key : {"name", "slots", "n", "eves", "p_fpa", "p_ma", "wavelength", "noise_power", "d_min",
                          "range_max", "path_loss_exponent", "distance", "reference_loss", "path_loss_enabled",
                          "theta_bob", "theta_eve", "warm_start", "seed", "pattern_samples", "ao", "nmpga", "pga",
                          "ma_only", "sweep"})
    CHECK_MESSAGE(j["scenario"].contains(key), key);
  CHECK(j["results"]["fma"]["slots"].size() == 4);
  CHECK(j["results"]["fma"]["slots"][0]["rate_bps_hz"].get<double>() == fma[0].best_rate);
}

TEST_CASE("identical scenario and seed give an identical report") {
  RunOptions opt;
  opt.sweeps = false;
  opt.patterns = false;
  auto scn = reference_scenario();
  scn.ao.position_restarts = 1;
  const auto a = report_json(run_experiment(scn, {Arm::Fma, Arm::MaOnly}, opt));
  const auto b = report_json(run_experiment(scn, {Arm::Fma, Arm::MaOnly}, opt));
  CHECK(a == b);
}

TEST_CASE("sweeps produce one row per value and arm") {
  auto scn = one_slot();
  scn.sweep.noise_powers = {1e-7, 1e-6};
  scn.sweep.bob_angles = {0.5, 1.0, 2.0};
  const auto noise = run_sweep(scn, SweepKind::Noise, {Arm::Fma, Arm::FpaOnly});
  CHECK(noise.size() == 4);
  const auto angle = run_sweep(scn, SweepKind::Angle, {Arm::FpaOnly});
  CHECK(angle.size() == 3);
  CHECK(run_sweep(scn, SweepKind::Alpha, {Arm::Fma}).empty());
  CHECK(parse_sweep_kind("alpha") == SweepKind::Alpha);
  CHECK_THROWS(parse_sweep_kind("beta"));
}

TEST_CASE("arm list parsing") {
  const auto a = parse_arm_list("fma,ma,fma");
  CHECK(a == std::vector<Arm>{Arm::Fma, Arm::MaOnly});
  CHECK_THROWS(parse_arm_list(""));
  CHECK_THROWS(parse_arm_list("fma,xyz"));
}

TEST_CASE("csv helpers") {
  CHECK(format_float(0.1) == "0.1");
  CHECK(format_float(1.0 / 3.0) == "0.333333333333");
  CHECK_THROWS_AS(format_float(std::nan("")), ExportError);
  const CsvTable t{{"a", "b"}, {"1", "2"}};
  CHECK(parse_csv(to_csv(t)) == t);
}
