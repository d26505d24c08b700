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

#include <cstdint>
#include <string>
#include <vector>

#include "entshare/measures.hpp"

namespace entshare {

struct AuditOptions {
  int d = 3;
  int n_channels = 100;
  std::uint64_t seed = 0;
  FefOptions fef;
};

struct AuditCheck {
  std::string name;
  double max_violation = 0.0;
  double tolerance = 0.0;
  int samples = 0;

  bool passed() const { return max_violation < tolerance; }
};

struct AuditReport {
  int d = 0;
  int n_channels = 0;
  std::uint64_t seed = 0;
  std::vector<AuditCheck> checks;

  bool passed() const;
  std::string to_json() const;
};

/// Samples n_channels random channels (Kraus count drawn from {2..max(2,d)})
/// and checks, per channel:
///  - dual/primal Choi lambda_max identity (1e-9)
///  - trace preservation on a random pure input (1e-12)
///  - local-unitary covariance of the one-sided action (1e-12 entrywise)
///  - FEF sandwich: Phi+-fidelity <= FEF <= min(lambda_max, (1+2N)/d) (1e-9)
/// For d = 2 it also samples a Pauli channel with largest weight >= 1/2 and
/// checks lambda_max(rho_{Phi+}) = (1 + 2N)/2 (1e-10).
/// Channel i uses the generator seeded with derive_seed(seed, i).
AuditReport run_audit(const AuditOptions& opts);

}  // namespace entshare
