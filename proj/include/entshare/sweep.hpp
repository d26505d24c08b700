// Copyright 2026 The entshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entshare/omega.hpp"

namespace entshare {

/// Bad sweep specification (maps to a usage error on the command line).
class SweepSpecError : public Error {
public:
  using Error::Error;
};

struct SweepAxis {
  int component = 0;  // 1-based index into x
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;

  /// k-th grid value, rounded to 15 significant digits so decimal grids such
  /// as 0.1, 0.2, ... come out exact.
  double value(int k) const;
};

enum class OutputFormat { csv, json };

/// Sweep file (JSON):
///   {"d": 3,
///    "axes": [{"component": 1, "start": 0.1, "stop": 0.9, "steps": 9}, ...],
///    "fixed": {"2": 0.5},
///    "output": "sweep.csv", "format": "csv"}
/// Every component 1..d-1 is either an axis or fixed. "output" and "format"
/// are optional and may be overridden on the command line.
struct SweepSpec {
  int d = 0;
  std::vector<SweepAxis> axes;
  std::map<int, double> fixed;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
};

SweepSpec parse_sweep_spec(std::string_view text);

struct SweepRow {
  std::vector<double> x;
  /// Empty when the point is strict and a certificate was produced.
  std::string skipped_reason;
  std::optional<TheoremCertificate> certificate;
};

/// Rows in lexicographic order of the grid indices, first axis slowest.
/// Points that are not strict are kept as skipped rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const FefOptions& opts);

std::string render_sweep_csv(int d, const std::vector<SweepRow>& rows);
std::string render_sweep_json(int d, const std::vector<SweepRow>& rows);

/// One CSV row for a certificate, same columns as the sweep table.
std::vector<std::string> certificate_csv_cells(const TheoremCertificate& cert);

}  // namespace entshare
