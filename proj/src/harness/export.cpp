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

#include "fmasec/harness/export.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#ifndef FMASEC_GIT_REVISION
#define FMASEC_GIT_REVISION "unknown"
#endif

namespace fmasec {

std::string format_float(double v) {
  if (!std::isfinite(v)) throw ExportError("refusing to export a non-finite value");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::vector<std::string> row;
    std::size_t start = pos;
    for (;;) {
      const auto comma = text.find(',', start);
      if (comma == std::string::npos || comma > nl) {
        row.push_back(text.substr(start, nl - start));
        break;
      }
      row.push_back(text.substr(start, comma - start));
      start = comma + 1;
    }
    t.push_back(std::move(row));
    pos = nl + 1;
  }
  return t;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ExportError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw ExportError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ExportError("cannot move '" + tmp.string() + "' to '" + path.string() + "'");
  }
}

namespace {

std::string name(Arm a) { return std::string(arm_name(a)); }
std::string count(std::size_t v) { return std::to_string(v); }

std::size_t eve_columns(const RunReport& r) { return r.scenario.eves; }

}  // namespace

CsvTable rates_table(const RunReport& r) {
  CsvTable t;
  std::vector<std::string> head{"slot", "arm", "rate_bps_hz", "iterations", "conf_bob_db", "an_bob_db"};
  for (std::size_t i = 1; i <= eve_columns(r); ++i) head.push_back("conf_eve" + count(i) + "_db");
  for (std::size_t i = 1; i <= eve_columns(r); ++i) head.push_back("an_eve" + count(i) + "_db");
  t.push_back(head);
  for (const auto& s : r.summaries) {
    std::vector<std::string> row{count(s.slot), name(s.arm), format_float(s.rate), count(s.iterations),
                                 format_float(s.conf_bob_db), format_float(s.an_bob_db)};
    for (double v : s.conf_eve_db) row.push_back(format_float(v));
    for (double v : s.an_eve_db) row.push_back(format_float(v));
    t.push_back(std::move(row));
  }
  return t;
}

CsvTable convergence_table(const RunReport& r) {
  CsvTable t{{"arm", "iteration", "rate", "slot", "best"}};
  for (const auto& c : r.convergence)
    t.push_back({name(c.arm), count(c.iteration), format_float(c.rate), count(c.slot), format_float(c.best)});
  return t;
}

CsvTable optimizer_trace_table(const RunReport& r) {
  CsvTable t{{"arm", "slot", "row", "rate", "best", "step", "momentum", "velocity_norm"}};
  for (const auto& o : r.optimizer_trace)
    t.push_back({name(o.arm), count(o.slot), count(o.row.iteration), format_float(o.row.rate),
                 format_float(o.row.best), format_float(o.row.step), format_float(o.row.momentum),
                 format_float(o.row.velocity_norm)});
  return t;
}

CsvTable positions_table(const RunReport& r) {
  CsvTable t{{"slot", "antenna_index", "position_m"}};
  if (const auto* run = r.find(Arm::Fma))
    for (std::size_t s = 0; s < run->results.size(); ++s)
      for (std::size_t i = 0; i < run->results[s].movable_positions.size(); ++i)
        t.push_back({count(s + 1), count(i), format_float(run->results[s].movable_positions[i])});
  return t;
}

CsvTable array_positions_table(const RunReport& r) {
  CsvTable t{{"arm", "slot", "array", "antenna_index", "position_m"}};
  for (const auto& s : r.summaries) {
    for (std::size_t i = 0; i < s.conf_positions.size(); ++i)
      t.push_back({name(s.arm), count(s.slot), "conf", count(i), format_float(s.conf_positions[i])});
    for (std::size_t i = 0; i < s.an_positions.size(); ++i)
      t.push_back({name(s.arm), count(s.slot), "an", count(i), format_float(s.an_positions[i])});
  }
  return t;
}

CsvTable displacement_table(const RunReport& r) {
  CsvTable t{{"arm", "slot", "antenna_index", "displacement_m"}};
  for (const auto& d : r.displacement)
    t.push_back({name(d.arm), count(d.slot), count(d.antenna), format_float(d.displacement)});
  return t;
}

CsvTable pattern_table(const PatternRecord& p) {
  CsvTable t{{"theta_rad", "conf_gain_db", "an_gain_db"}};
  const double floor_db = to_db(0.0);
  for (std::size_t k = 0; k < p.theta.size(); ++k)
    t.push_back({format_float(p.theta[k]), format_float(p.conf_db[k]),
                 format_float(p.an_db.empty() ? floor_db : p.an_db[k])});
  return t;
}

CsvTable sweep_table(const RunReport& r, SweepKind kind) {
  const char* col = kind == SweepKind::Noise ? "noise_power_w"
                    : kind == SweepKind::Alpha ? "path_loss_exponent"
                                               : "bob_angle_rad";
  CsvTable t{{col, "arm", "rate_bps_hz"}};
  for (const auto& s : r.sweeps)
    if (s.kind == kind) t.push_back({format_float(s.value), name(s.arm), format_float(s.rate)});
  return t;
}

namespace {

nlohmann::ordered_json optimizer_json(const OptimizerConfig& c) {
  return {{"max_iterations", c.max_iterations}, {"step", c.step},
          {"momentum", c.momentum},             {"up_factor", c.up_factor},
          {"down_factor", c.down_factor},       {"velocity_damp", c.velocity_damp},
          {"velocity_decay", c.velocity_decay}, {"momentum_cap", c.momentum_cap},
          {"window", c.window},                 {"rate_tol", c.rate_tol}};
}

nlohmann::ordered_json scenario_json(const Scenario& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["slots"] = s.slots;
  j["n"] = s.n;
  j["eves"] = s.eves;
  j["p_fpa"] = s.p_fpa;
  j["p_ma"] = s.p_ma;
  j["wavelength"] = s.wavelength;
  j["noise_power"] = s.noise_power;
  j["d_min"] = s.d_min;
  j["range_max"] = s.range_max;
  j["path_loss_exponent"] = s.path_loss_exponent;
  j["distance"] = s.distance;
  j["reference_loss"] = s.reference_loss;
  j["path_loss_enabled"] = s.path_loss_enabled;
  j["theta_bob"] = s.theta_bob;
  j["theta_eve"] = s.theta_eve;
  j["warm_start"] = s.warm_start;
  j["seed"] = s.seed;
  j["pattern_samples"] = s.pattern_samples;
  j["ao"] = {{"max_iterations", s.ao.max_iterations},
             {"rate_tol", s.ao.rate_tol},
             {"stagnation_limit", s.ao.stagnation_limit},
             {"stagnation_enabled", s.ao.stagnation_enabled},
             {"position_optimizer", position_method_name(s.ao.position_method)},
             {"position_restarts", s.ao.position_restarts},
             {"update_w_fpa", s.ao.update_w_fpa},
             {"update_positions", s.ao.update_positions},
             {"update_w_ma", s.ao.update_w_ma}};
  j["nmpga"] = optimizer_json(s.ao.nmpga);
  j["pga"] = optimizer_json(s.ao.pga);
  j["ma_only"] = {{"mode", ma_only_mode_name(s.ao.ma_only_mode)},
                  {"optimizer", position_method_name(s.ao.ma_only_method)}};
  j["sweep"] = {{"noise", s.sweep.noise_powers},
                {"alpha", s.sweep.path_loss_exponents},
                {"bob_angle", s.sweep.bob_angles},
                {"angle_slot", s.sweep.angle_slot}};
  return j;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string report_json(const RunReport& r) {
  nlohmann::ordered_json j;
  std::string arms;
  for (Arm a : r.arms) arms += (arms.empty() ? "" : ",") + name(a);
  j["metadata"] = {{"tool", "fmasec"},
                   {"revision", FMASEC_GIT_REVISION},
                   {"run_id", hex16(sub_seed(r.scenario.seed, format_scenario(r.scenario) + "|" + arms))},
                   {"arms", arms}};
  j["scenario"] = scenario_json(r.scenario);
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (const auto& run : r.runs) {
    nlohmann::ordered_json a;
    std::vector<double> rates;
    nlohmann::ordered_json slots = nlohmann::ordered_json::array();
    for (const auto& res : run.results) {
      rates.push_back(res.best_rate);
      slots.push_back({{"rate_bps_hz", res.best_rate},
                       {"objective", res.best_objective},
                       {"iterations", res.iterations},
                       {"stagnated", res.stagnated},
                       {"conf_positions", res.conf_positions},
                       {"an_positions", res.an_positions}});
    }
    a["average_rate_bps_hz"] = rates.empty() ? 0.0 : average_secrecy_rate(rates);
    a["slots"] = slots;
    results[name(run.arm)] = a;
  }
  j["results"] = results;
  nlohmann::ordered_json sweeps = nlohmann::ordered_json::array();
  for (const auto& s : r.sweeps)
    sweeps.push_back({{"kind", sweep_kind_name(s.kind)},
                      {"value", s.value},
                      {"arm", name(s.arm)},
                      {"rate_bps_hz", s.rate},
                      {"slot_rates", s.slot_rates}});
  j["sweeps"] = sweeps;
  return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> export_report(const RunReport& r, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw ExportError("cannot create output directory '" + out_dir.string() + "': " + ec.message());

  std::vector<std::filesystem::path> written;
  auto put = [&](const std::string& file, const std::string& content) {
    const auto p = out_dir / file;
    write_file_atomic(p, content);
    written.push_back(p);
  };
  put("rates_by_slot.csv", to_csv(rates_table(r)));
  put("convergence.csv", to_csv(convergence_table(r)));
  put("optimizer_trace.csv", to_csv(optimizer_trace_table(r)));
  put("positions.csv", to_csv(positions_table(r)));
  put("array_positions.csv", to_csv(array_positions_table(r)));
  put("displacement.csv", to_csv(displacement_table(r)));
  for (const auto& p : r.patterns)
    put("pattern_" + name(p.arm) + "_" + count(p.slot) + ".csv", to_csv(pattern_table(p)));
  for (SweepKind k : {SweepKind::Noise, SweepKind::Alpha, SweepKind::Angle})
    put("sweep_" + std::string(sweep_kind_name(k)) + ".csv", to_csv(sweep_table(r, k)));
  put("report.json", report_json(r));
  return written;
}

}  // namespace fmasec
