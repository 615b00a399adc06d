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

#ifndef FMASEC_HARNESS_SCENARIO_HPP
#define FMASEC_HARNESS_SCENARIO_HPP

#include "fmasec/ao.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fmasec {

/// Malformed or invalid scenario text. `line` is 1-based; 0 means the
/// problem is not tied to a single line (empty input, cross-field checks).
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::size_t line, std::string field, const std::string& what);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

struct SweepConfig {
  std::vector<double> noise_powers;  // W
  std::vector<double> path_loss_exponents;
  std::vector<double> bob_angles;  // rad; Eves stay at their slot values
  std::size_t angle_slot = 1;      // 1-based slot whose Eves the angle sweep holds
};

struct Scenario {
  std::string name = "scenario";
  std::size_t slots = 1;  // Q
  std::size_t n = 5;
  std::size_t eves = 2;  // M
  double p_fpa = 5.0;
  double p_ma = 1.0;
  double wavelength = 0.0508;
  double noise_power = 1e-8;
  double d_min = 0.0254;
  double range_max = 0.508;
  double path_loss_exponent = 2.0;
  double distance = 100.0;
  double reference_loss = 0.0;  // <= 0 selects the free-space default
  bool path_loss_enabled = false;
  std::vector<double> theta_bob;               // length Q
  std::vector<std::vector<double>> theta_eve;  // M lists of length Q
  bool warm_start = true;
  std::uint64_t seed = 1;
  std::size_t pattern_samples = 2048;
  AoConfig ao;
  SweepConfig sweep;

  /// Throws ScenarioError naming the offending field.
  void validate() const;

  [[nodiscard]] LinkGeometry link(double angle) const;
  [[nodiscard]] SlotProblem slot_problem(std::size_t slot_index) const;  // 0-based
  [[nodiscard]] std::vector<SlotProblem> slot_problems() const;
};

/// Table-2 constants with the four-slot angle schedule, path loss disabled.
Scenario reference_scenario();

/// Flat `key = value` text; `#` starts a comment. Values are numbers,
/// `true`/`false`, words, or `[a, b, ...]` lists. Numeric fields accept
/// arithmetic over `pi` and `lambda` (the wavelength), e.g. `10*lambda`.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Serialized form accepted by parse_scenario (round-trips every field).
std::string format_scenario(const Scenario& s);

/// Evaluates one numeric expression; `lambda` is substituted by `wavelength`.
double evaluate_expression(std::string_view expr, double wavelength);

/// Named child seed: arms and oracles draw from independent streams.
std::uint64_t sub_seed(std::uint64_t root, std::string_view name);

}  // namespace fmasec

#endif  // FMASEC_HARNESS_SCENARIO_HPP
