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

#include <array>
#include <string>
#include <vector>

#include "entshare/random.hpp"
#include "entshare/states.hpp"

namespace entshare {

/// Completely positive map on d x d matrices given by an ordered Kraus list.
///
/// Channels proper come out of kraus_validate() and satisfy
/// sum_i A_i^dagger A_i = I within 1e-10. Dual maps of nonunital channels
/// share the representation but are tagged as not trace preserving.
class KrausChannel {
public:
  int dim() const { return dim_; }
  const std::vector<Matrix>& kraus_ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool trace_preserving() const { return trace_preserving_; }

  /// max |sum_i A_i^dagger A_i - I|.
  double completeness_residual() const;
  /// max |sum_i A_i A_i^dagger - I|.
  double unitality_residual() const;

  /// Stable FNV-1a digest of the Kraus entries, hex encoded.
  std::string hash() const;

private:
  KrausChannel(int dim, std::vector<Matrix> ops, bool trace_preserving)
      : dim_(dim), ops_(std::move(ops)), trace_preserving_(trace_preserving) {}

  friend KrausChannel kraus_validate(std::vector<Matrix> ops);
  friend KrausChannel dual(const KrausChannel& ch);

  int dim_;
  std::vector<Matrix> ops_;
  bool trace_preserving_;
};

/// Throws NotTracePreserving (with the worst residual and its entry) when
/// the completeness relation is off by more than 1e-10.
KrausChannel kraus_validate(std::vector<Matrix> ops);

bool is_unital(const KrausChannel& ch);

/// Kraus list {A_i^dagger}. Trace preserving iff ch is unital.
KrausChannel dual(const KrausChannel& ch);

/// sum_i (I (x) K_i)|psi><psi|(I (x) K_i^dagger).
DensityOperator apply_one_sided(const KrausChannel& map, const PureBipartiteState& psi);

struct ChoiState {
  std::string channel_hash;
  DensityOperator rho;
};

/// rho_{Phi+, ch}; also checks that the retained side reduces to I/d.
ChoiState choi_state(const KrausChannel& ch);

struct TopEigenpair {
  double value;
  PureBipartiteState vector;
  bool degenerate;  // gap to the second eigenvalue below 1e-10
  double residual;  // |rho v - lambda v|
};

/// Largest eigenvalue of rho_{Phi+, map} and a unit eigenvector. The
/// eigenvector phase is fixed so its largest-magnitude entry is real positive.
TopEigenpair top_choi_eigenpair(const KrausChannel& map);

/// Largest eigenvalue of rho_{Phi+, map}, without the eigenvector.
double choi_lambda_max(const KrausChannel& map);

// Standard channels.
KrausChannel identity_channel(int d);
KrausChannel unitary_channel(const Matrix& u);
/// Weights for {I, X, Y, Z}; must be non-negative and sum to 1.
KrausChannel pauli_channel(const std::array<double, 4>& weights);
/// Qubit amplitude damping: diag(1, sqrt(1-gamma)), sqrt(gamma)|0><1|.
KrausChannel amplitude_damping(double gamma);
/// rho -> (1-p) rho + p I/d using the d^2 Weyl operators.
KrausChannel depolarizing(int d, double p);
/// Measure in the computational basis, prepare prepared[i] on outcome i.
KrausChannel measure_prepare(const std::vector<Vector>& prepared);

/// Random channel with `num_kraus` operators: the first d columns of a Haar
/// unitary on C^{d * num_kraus}, sliced into d x d blocks.
KrausChannel random_channel(int d, int num_kraus, Rng& rng);

/// Random Pauli channel whose largest weight is at least 1/2.
KrausChannel random_pauli_channel(Rng& rng, std::array<double, 4>* weights_out = nullptr);

}  // namespace entshare
