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

#ifndef FMASEC_HARNESS_EXPORT_HPP
#define FMASEC_HARNESS_EXPORT_HPP

#include "fmasec/harness/experiment.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmasec {

class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Twelve significant digits, the CSV float format.
std::string format_float(double v);

/// Rows of already-formatted cells; the first row is the header.
using CsvTable = std::vector<std::vector<std::string>>;

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

/// Writes `content` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

CsvTable rates_table(const RunReport& r);
CsvTable convergence_table(const RunReport& r);
CsvTable optimizer_trace_table(const RunReport& r);
CsvTable positions_table(const RunReport& r);      // FMA movable array
CsvTable array_positions_table(const RunReport& r);  // every arm, both arrays
CsvTable displacement_table(const RunReport& r);
CsvTable pattern_table(const PatternRecord& p);
CsvTable sweep_table(const RunReport& r, SweepKind kind);

/// JSON text with the scenario echo, per-arm results and run metadata.
std::string report_json(const RunReport& r);

/// Writes every table plus report.json into `out_dir` (created if needed).
/// Returns the written paths in a fixed order.
std::vector<std::filesystem::path> export_report(const RunReport& r, const std::filesystem::path& out_dir);

}  // namespace fmasec

#endif  // FMASEC_HARNESS_EXPORT_HPP
