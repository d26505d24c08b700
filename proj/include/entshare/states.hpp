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

#include <vector>

#include "entshare/types.hpp"

namespace entshare {

class DensityOperator;

/// Unit vector on C^d (x) C^d. Amplitude (i, j) lives at i * d + j.
class PureBipartiteState {
public:
  /// Validates dim >= 2, size d^2 and unit norm (1e-12).
  PureBipartiteState(int dim, Vector amplitudes);

  /// Normalizes a nonzero vector first.
  static PureBipartiteState normalized(int dim, const Vector& amplitudes);

  int dim() const { return dim_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(int i, int j) const { return amplitudes_(flat_index(i, j, dim_)); }

  /// d x d coefficient matrix M with M(i, j) = amplitude(i, j).
  Matrix coefficient_matrix() const;

  /// |psi><psi| as a bipartite density operator.
  DensityOperator projector() const;

private:
  int dim_;
  Vector amplitudes_;
};

/// Hermitian, unit-trace, numerically PSD operator on C^{dim_a} (x) C^{dim_b}.
class DensityOperator {
public:
  enum class TraceCheck { strict, relaxed };

  /// Checks hermiticity (1e-12 entrywise), trace (1e-12) and
  /// min eigenvalue >= -1e-10. With TraceCheck::relaxed the trace clause is
  /// skipped; outputs of non-trace-preserving maps use that mode.
  DensityOperator(int dim_a, int dim_b, Matrix matrix,
                  TraceCheck trace_check = TraceCheck::strict);

  static DensityOperator maximally_mixed(int dim_a, int dim_b);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  const Matrix& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }

  /// Ascending eigenvalues.
  RealVector eigenvalues() const;

private:
  int dim_a_;
  int dim_b_;
  Matrix matrix_;
};

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // non-increasing
  std::vector<Vector> left_basis;
  std::vector<Vector> right_basis;

  double spread() const;
  bool is_maximally_entangled(double tol = kMaxEntangledTol) const;
};

enum class Subsystem { first, second };

/// (1/sqrt(d)) sum_i |ii>.
PureBipartiteState max_entangled(int d);

/// (W (x) I)|Phi+>; W must satisfy W^dagger W = I within 1e-10.
PureBipartiteState mes_from_unitary(const Matrix& unitary);

SchmidtDecomposition schmidt(const PureBipartiteState& state);

/// Index swap on the chosen factor. Works on any bipartite operator, not only
/// density matrices; the result is generally not PSD.
Matrix partial_transpose(const Matrix& op, int dim_a, int dim_b, Subsystem subsystem);
Matrix partial_transpose(const DensityOperator& rho, Subsystem subsystem);

/// Trace over the chosen factor; returns the operator on the other one.
Matrix partial_trace(const Matrix& op, int dim_a, int dim_b, Subsystem traced);

/// <phi|rho|phi> clamped to [0, 1].
double fidelity_with(const DensityOperator& rho, const PureBipartiteState& phi);

/// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& h);

double unitarity_defect(const Matrix& m);

}  // namespace entshare
