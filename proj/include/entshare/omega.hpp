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

#include <string>
#include <vector>

#include "entshare/channels.hpp"
#include "entshare/measures.hpp"

namespace entshare {

/// Parameters of the Omega channel family in dimension d:
/// A_0 = diag(1, x_1, ..., x_{d-1}) and A_m = sqrt(1 - x_m^2)|0><m|.
///
/// Strict parameters (d >= 3, every x_i in the open interval (0, 1), and at
/// least one pair with |x_i - x_j| > 1e-12) are what the theorem machinery
/// needs. Relaxed parameters admit the closed cube [0, 1]^{d-1} and any
/// d >= 2; the closed-form evaluators accept them for boundary studies.
struct OmegaParams {
  enum class Mode { strict, relaxed };

  int d = 0;
  std::vector<double> x;
  Mode mode = Mode::strict;

  /// Throws ParameterError naming the violated clause.
  static OmegaParams make(int d, std::vector<double> x, Mode mode = Mode::strict);

  bool relaxed() const { return mode == Mode::relaxed; }
};

/// First violated strict clause, or an empty string when the point is strict.
std::string strict_violation(int d, const std::vector<double>& x);

inline constexpr double kDistinctnessTol = 1e-12;

KrausChannel omega_channel(const OmegaParams& p);

/// (1 + sum x_i^2) / d.
double omega_lambda_max(const OmegaParams& p);

/// (sum x_i^2 + sum_{i<j} x_i x_j) / d.
double omega_negativity_phiplus(const OmegaParams& p);

/// Ascending closed-form PT spectrum of the Choi state: 1/d (d times),
/// +-x_i^2/d, and +-x_i x_j/d for i < j.
std::vector<double> omega_pt_spectrum(const OmegaParams& p);

/// (d - 2) sum x_i^2 - 2 sum_{i<j} x_i x_j.
double omega_gap(const OmegaParams& p);

/// <Phi+|rho_{Phi+,Omega}|Phi+> = ((1 + sum x_i) / d)^2.
double omega_phiplus_fidelity(const OmegaParams& p);

struct TheoremCertificate {
  OmegaParams params;
  double lambda_max_closed = 0.0;
  double lambda_max_numeric = 0.0;
  double negativity_phiplus_closed = 0.0;
  double negativity_phiplus_numeric = 0.0;
  double pt_spectrum_deviation = 0.0;
  double fstar_bound_phiplus = 0.0;
  double gap = 0.0;
  PureBipartiteState psi_prime;
  bool psi_prime_degenerate = false;
  double psi_prime_schmidt_spread = 0.0;
  double fef_psi_prime = 0.0;
  bool fef_psi_prime_converged = false;
  double negativity_psi_prime = 0.0;
  /// Best certified lower bound on the channel's optimal singlet fraction:
  /// max(lambda_max_numeric, fef_psi_prime). Not the optimum itself.
  double fidelity_lower_bound = 0.0;
  bool verdict_lemma3 = false;
  bool verdict_theorem1 = false;
  bool verdict_negativity_corollary = false;
  /// Closed forms agree with the eigensolves within 1e-10.
  bool closed_forms_consistent = false;

  bool all_verdicts() const {
    return verdict_lemma3 && verdict_theorem1 && verdict_negativity_corollary;
  }
};

inline constexpr double kClosedFormTol = 1e-10;
inline constexpr double kSchmidtSpreadMin = 1e-8;

/// Builds the full inequality-chain certificate for strict parameters.
TheoremCertificate theorem1_certificate(const OmegaParams& p, const FefOptions& opts = {});

}  // namespace entshare
