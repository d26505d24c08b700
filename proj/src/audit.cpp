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

#include "entshare/audit.hpp"

#include <algorithm>
#include <cmath>

#include "entshare/channels.hpp"
#include "entshare/io.hpp"
#include "entshare/parallel.hpp"
#include "entshare/random.hpp"

namespace entshare {
namespace {

enum CheckIndex { kDualPrimal, kTrace, kCovariance, kSandwich, kPauli, kNumChecks };

struct Sample {
  double values[kNumChecks] = {0.0, 0.0, 0.0, 0.0, 0.0};
};

Matrix kron_left(const Matrix& w, int d) {
  Matrix out = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out.block(a * d, b * d, d, d) = w(a, b) * Matrix::Identity(d, d);
  return out;
}

Sample audit_one(const AuditOptions& opts, std::size_t index) {
  const int d = opts.d;
  Rng rng(derive_seed(opts.seed, index));
  std::uniform_int_distribution<int> kraus_count(2, std::max(2, d));
  const KrausChannel ch = random_channel(d, kraus_count(rng), rng);
  const PureBipartiteState psi = random_pure_state(d, rng);
  const Matrix w = haar_unitary(d, rng);

  Sample s;
  s.values[kDualPrimal] = std::abs(choi_lambda_max(dual(ch)) - choi_lambda_max(ch));

  const DensityOperator out = apply_one_sided(ch, psi);
  s.values[kTrace] = std::abs(out.trace() - 1.0);

  const Matrix lift = kron_left(w, d);
  const PureBipartiteState rotated = PureBipartiteState::normalized(d, lift * psi.amplitudes());
  const Matrix lhs = apply_one_sided(ch, rotated).matrix();
  const Matrix rhs = lift * out.matrix() * lift.adjoint();
  s.values[kCovariance] = (lhs - rhs).cwiseAbs().maxCoeff();

  FefOptions fopts = opts.fef;
  fopts.seed = derive_seed(opts.seed ^ 0x5eedULL, index);
  const double lower = fidelity_with(out, max_entangled(d));
  const double value = fef(out, fopts).value;
  const double upper = std::min(out.eigenvalues().maxCoeff(), fstar_upper_bound(out));
  s.values[kSandwich] = std::max({0.0, lower - value, value - upper});

  if (d == 2) {
    const KrausChannel pauli = random_pauli_channel(rng);
    const ChoiState choi = choi_state(pauli);
    const double lmax = choi.rho.eigenvalues().maxCoeff();
    if (lmax >= 0.5) {
      s.values[kPauli] = std::abs(lmax - (1.0 + 2.0 * negativity(choi.rho)) / 2.0);
    }
  }
  return s;
}

}  // namespace

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed(); });
}

std::string AuditReport::to_json() const {
  std::string list;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    JsonObjectWriter w(4);
    w.string("name", checks[i].name)
        .real("max_violation", checks[i].max_violation)
        .real("tolerance", checks[i].tolerance)
        .integer("samples", checks[i].samples)
        .boolean("passed", checks[i].passed());
    list += (i ? ",\n    " : "\n    ") + w.str();
  }
  JsonObjectWriter top;
  top.integer("d", d)
      .integer("n_channels", n_channels)
      .integer("seed", static_cast<long long>(seed))
      .raw("checks", "[" + list + "\n  ]")
      .boolean("passed", passed());
  return top.str() + "\n";
}

AuditReport run_audit(const AuditOptions& opts) {
  if (opts.d < 2 || opts.d > 6) throw InvalidDimension("audit needs d in [2, 6]");
  if (opts.n_channels < 1) throw InvalidDimension("audit needs n_channels >= 1");

  std::vector<Sample> samples(static_cast<std::size_t>(opts.n_channels));
  parallel_for(samples.size(), [&](std::size_t i) { samples[i] = audit_one(opts, i); });

  AuditReport report;
  report.d = opts.d;
  report.n_channels = opts.n_channels;
  report.seed = opts.seed;
  const std::pair<const char*, double> specs[] = {
      {"dual_primal_lambda_max", 1e-9},
      {"trace_preservation", 1e-12},
      {"local_unitary_covariance", 1e-12},
      {"fef_sandwich", 1e-9},
      {"qubit_pauli_formula", 1e-10},
  };
  const int active = opts.d == 2 ? kNumChecks : kPauli;
  for (int c = 0; c < active; ++c) {
    AuditCheck check{specs[c].first, 0.0, specs[c].second, opts.n_channels};
    for (const auto& s : samples) check.max_violation = std::max(check.max_violation, s.values[c]);
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace entshare
