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

// Command-line front end: validate, measures, certify, sweep, audit.
//
// Exit codes: 0 success (all verdicts true), 1 a verdict or invariant is
// false, 2 usage or parameter error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entshare/audit.hpp"
#include "entshare/channels.hpp"
#include "entshare/io.hpp"
#include "entshare/measures.hpp"
#include "entshare/omega.hpp"
#include "entshare/search.hpp"
#include "entshare/sweep.hpp"

namespace {

using namespace entshare;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct CommonFlags {
  std::uint64_t seed = 0;
  int restarts = FefOptions{}.restarts;
  std::string out;
};

FefOptions fef_options(const CommonFlags& flags) {
  FefOptions opts;
  opts.seed = flags.seed;
  opts.restarts = flags.restarts;
  return opts;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

int cmd_validate(const std::string& path) {
  KrausChannel ch = [&] {
    try {
      return read_channel_file(path);
    } catch (const NotTracePreserving& e) {
      std::cout << "invalid: not trace preserving\n"
                << "completeness_residual: " << format_real(e.residual()) << " at entry (" << e.row()
                << "," << e.col() << ")\n";
      throw;
    }
  }();
  std::cout << "dimension: " << ch.dim() << "\n"
            << "kraus_operators: " << ch.size() << "\n"
            << "completeness_residual: " << format_real(ch.completeness_residual()) << "\n"
            << "unitality_residual: " << format_real(ch.unitality_residual()) << "\n"
            << "valid, " << (is_unital(ch) ? "unital" : "nonunital") << "\n";
  return kOk;
}

int cmd_measures(const std::string& path, const std::string& input, const CommonFlags& flags) {
  const KrausChannel ch = read_channel_file(path);
  const int d = ch.dim();
  PureBipartiteState psi = max_entangled(std::max(2, d));
  if (input == "phiplus") {
    psi = max_entangled(d);
  } else if (input == "psi_prime") {
    psi = best_phiplus_fidelity_input(ch).best_state;
  } else {
    psi = read_state_file(input);
    if (psi.dim() != d) {
      throw InvalidDimension("state file dimension " + std::to_string(psi.dim()) +
                             " does not match channel dimension " + std::to_string(d));
    }
  }
  const DensityOperator out = apply_one_sided(ch, psi);
  const FefResult fr = fef(out, fef_options(flags));
  JsonObjectWriter w;
  w.integer("d", d)
      .string("input", input)
      .real("phiplus_fidelity", fidelity_with(out, max_entangled(d)))
      .real("fef_value", fr.value)
      .boolean("fef_converged", fr.converged)
      .real("negativity", negativity(out))
      .real("fstar_upper_bound", fstar_upper_bound(out))
      .real("lambda_max_choi", choi_lambda_max(ch));
  emit(w.str() + "\n", flags.out);
  return kOk;
}

int cmd_certify(int d, const std::vector<double>& x, const CommonFlags& flags) {
  const OmegaParams p = OmegaParams::make(d, x);
  const TheoremCertificate cert = theorem1_certificate(p, fef_options(flags));
  emit(certificate_to_json(cert) + "\n", flags.out);
  return cert.all_verdicts() && cert.closed_forms_consistent ? kOk : kFalse;
}

int cmd_sweep(const std::string& spec_path, const std::string& format, const CommonFlags& flags) {
  SweepSpec spec = parse_sweep_spec(read_text_file(spec_path));
  if (!flags.out.empty()) spec.output_path = flags.out;
  if (format == "csv") spec.format = OutputFormat::csv;
  if (format == "json") spec.format = OutputFormat::json;
  const auto rows = run_sweep(spec, fef_options(flags));
  const std::string text = spec.format == OutputFormat::csv ? render_sweep_csv(spec.d, rows)
                                                            : render_sweep_json(spec.d, rows);
  emit(text, spec.output_path);
  bool all = true;
  for (const auto& row : rows) {
    if (row.certificate) all = all && row.certificate->all_verdicts();
  }
  return all ? kOk : kFalse;
}

int cmd_audit(int d, int n, const CommonFlags& flags) {
  AuditOptions opts;
  opts.d = d;
  opts.n_channels = n;
  opts.seed = flags.seed;
  opts.fef = fef_options(flags);
  const AuditReport report = run_audit(opts);
  emit(report.to_json(), flags.out);
  return report.passed() ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement sharing over noisy qudit channels"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string channel_file;
  std::string input = "phiplus";
  int d = 0;
  std::vector<double> x;
  std::string sweep_file;
  std::string format;
  int n_channels = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", flags.seed, "Random seed");
    sub->add_option("--restarts", flags.restarts, "FEF optimizer restarts")->check(CLI::PositiveNumber);
    sub->add_option("--out", flags.out, "Output file (default: stdout)");
  };

  auto* validate = app.add_subcommand("validate", "Check a channel file");
  validate->add_option("channel_file", channel_file)->required();

  auto* measures = app.add_subcommand("measures", "Entanglement measures of a channel output");
  measures->add_option("channel_file", channel_file)->required();
  measures->add_option("--input", input, "phiplus, psi_prime, or a state file");
  add_common(measures);

  auto* certify = app.add_subcommand("certify", "Inequality-chain certificate for an Omega channel");
  certify->add_option("--d", d, "Dimension")->required();
  certify->add_option("--x", x, "Comma-separated x_1..x_{d-1}")->required()->delimiter(',');
  add_common(certify);

  auto* sweep = app.add_subcommand("sweep", "Certificate table over an Omega parameter grid");
  sweep->add_option("sweep_file", sweep_file)->required();
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  add_common(sweep);

  auto* audit = app.add_subcommand("audit", "Property audit over random channels");
  audit->add_option("--d", d, "Dimension")->required();
  audit->add_option("--n-channels,-n", n_channels, "Number of random channels")->required();
  add_common(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(channel_file);
    if (*measures) return cmd_measures(channel_file, input, flags);
    if (*certify) return cmd_certify(d, x, flags);
    if (*sweep) return cmd_sweep(sweep_file, format, flags);
    if (*audit) {
      if (n_channels < 1 || d < 2 || d > 6) {
        std::cerr << "error: audit needs --d in [2,6] and --n-channels >= 1\n";
        return kUsage;
      }
      return cmd_audit(d, n_channels, flags);
    }
  } catch (const NotTracePreserving& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFalse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
