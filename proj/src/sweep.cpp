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

#include "entshare/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

#include <json.hpp>

#include "entshare/io.hpp"
#include "entshare/parallel.hpp"

namespace entshare {
namespace {

using nlohmann::json;

const char* bool_cell(bool b) { return b ? "true" : "false"; }

std::vector<double> grid_point(const SweepSpec& spec, const std::vector<int>& index) {
  std::vector<double> x(static_cast<std::size_t>(spec.d - 1), 0.0);
  for (const auto& [component, value] : spec.fixed) x[static_cast<std::size_t>(component - 1)] = value;
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    const SweepAxis& axis = spec.axes[a];
    x[static_cast<std::size_t>(axis.component - 1)] = axis.value(index[a]);
  }
  return x;
}

}  // namespace

double SweepAxis::value(int k) const {
  const double raw = steps == 1 ? start : start + (stop - start) * k / (steps - 1);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", raw);
  return std::strtod(buf, nullptr);
}

SweepSpec parse_sweep_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SweepSpecError(std::string("malformed sweep file: ") + e.what());
  }
  try {
    SweepSpec spec;
    spec.d = doc.at("d").get<int>();
    if (spec.d < 2) throw SweepSpecError("sweep needs d >= 2");
    if (!doc.contains("axes") || !doc["axes"].is_array() || doc["axes"].empty()) {
      throw SweepSpecError("sweep needs at least one axis");
    }
    std::set<int> seen;
    for (const auto& a : doc["axes"]) {
      SweepAxis axis;
      axis.component = a.at("component").get<int>();
      axis.start = a.at("start").get<double>();
      axis.stop = a.at("stop").get<double>();
      axis.steps = a.at("steps").get<int>();
      if (axis.component < 1 || axis.component > spec.d - 1) {
        throw SweepSpecError("axis component " + std::to_string(axis.component) + " out of range");
      }
      if (axis.steps < 1) throw SweepSpecError("axis steps must be >= 1");
      if (!seen.insert(axis.component).second) {
        throw SweepSpecError("component " + std::to_string(axis.component) + " listed twice");
      }
      spec.axes.push_back(axis);
    }
    if (doc.contains("fixed")) {
      for (const auto& [key, value] : doc["fixed"].items()) {
        const int component = std::stoi(key);
        if (component < 1 || component > spec.d - 1) {
          throw SweepSpecError("fixed component " + key + " out of range");
        }
        if (!seen.insert(component).second) {
          throw SweepSpecError("component " + key + " listed twice");
        }
        spec.fixed[component] = value.get<double>();
      }
    }
    if (static_cast<int>(seen.size()) != spec.d - 1) {
      throw SweepSpecError("every component 1..d-1 must be an axis or fixed");
    }
    if (doc.contains("output")) spec.output_path = doc["output"].get<std::string>();
    if (doc.contains("format")) {
      const auto f = doc["format"].get<std::string>();
      if (f == "csv") {
        spec.format = OutputFormat::csv;
      } else if (f == "json") {
        spec.format = OutputFormat::json;
      } else {
        throw SweepSpecError("format must be csv or json");
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw SweepSpecError(std::string("invalid sweep file: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw SweepSpecError("fixed component keys must be integers");
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const FefOptions& opts) {
  if (spec.axes.empty()) throw SweepSpecError("sweep needs at least one axis");
  std::size_t total = 1;
  for (const auto& axis : spec.axes) total *= static_cast<std::size_t>(axis.steps);

  std::vector<SweepRow> rows(total);
  parallel_for(total, [&](std::size_t flat) {
    std::vector<int> index(spec.axes.size());
    std::size_t rest = flat;
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      const auto steps = static_cast<std::size_t>(spec.axes[a].steps);
      index[a] = static_cast<int>(rest % steps);
      rest /= steps;
    }
    SweepRow row;
    row.x = grid_point(spec, index);
    row.skipped_reason = strict_violation(spec.d, row.x);
    if (row.skipped_reason.empty()) {
      row.certificate = theorem1_certificate(OmegaParams::make(spec.d, row.x), opts);
    }
    rows[flat] = std::move(row);
  });
  return rows;
}

std::vector<std::string> certificate_csv_cells(const TheoremCertificate& cert) {
  std::vector<std::string> cells = {std::to_string(cert.params.d)};
  for (double xi : cert.params.x) cells.push_back(format_real(xi));
  cells.push_back("ok");
  for (double v : {cert.lambda_max_closed, cert.negativity_phiplus_closed, cert.fstar_bound_phiplus,
                   cert.gap, cert.fef_psi_prime, cert.negativity_psi_prime}) {
    cells.push_back(format_real(v));
  }
  cells.push_back(bool_cell(cert.verdict_lemma3));
  cells.push_back(bool_cell(cert.verdict_theorem1));
  cells.push_back(bool_cell(cert.verdict_negativity_corollary));
  return cells;
}

std::string render_sweep_csv(int d, const std::vector<SweepRow>& rows) {
  std::string out = csv_line(certificate_csv_header(d));
  for (const auto& row : rows) {
    if (row.certificate) {
      out += csv_line(certificate_csv_cells(*row.certificate));
      continue;
    }
    std::vector<std::string> cells = {std::to_string(d)};
    for (double xi : row.x) cells.push_back(format_real(xi));
    cells.push_back("skipped");
    // Closed forms stay meaningful on the relaxed cube; search columns do not.
    const auto relaxed = [&]() -> std::optional<OmegaParams> {
      try {
        return OmegaParams::make(d, row.x, OmegaParams::Mode::relaxed);
      } catch (const ParameterError&) {
        return std::nullopt;
      }
    }();
    if (relaxed) {
      const double neg = omega_negativity_phiplus(*relaxed);
      cells.push_back(format_real(omega_lambda_max(*relaxed)));
      cells.push_back(format_real(neg));
      cells.push_back(format_real((1.0 + 2.0 * neg) / d));
      cells.push_back(format_real(omega_gap(*relaxed)));
    } else {
      cells.insert(cells.end(), 4, "");
    }
    cells.insert(cells.end(), 5, "");
    out += csv_line(cells);
  }
  return out;
}

std::string render_sweep_json(int d, const std::vector<SweepRow>& rows) {
  std::string list;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& row = rows[i];
    JsonObjectWriter w(4);
    w.real_array("x", row.x);
    if (row.certificate) {
      w.string("status", "ok");
      w.raw("certificate", certificate_to_json(*row.certificate));
    } else {
      w.string("status", "skipped").string("reason", row.skipped_reason);
    }
    list += (i ? ",\n    " : "\n    ") + w.str();
  }
  JsonObjectWriter top;
  top.integer("d", d).raw("rows", "[" + list + (rows.empty() ? "]" : "\n  ]"));
  return top.str() + "\n";
}

}  // namespace entshare
