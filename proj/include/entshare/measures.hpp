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

#include "entshare/channels.hpp"
#include "entshare/states.hpp"

namespace entshare {

/// Sum of |negative eigenvalues| of the partial transpose. Eigenvalues in
/// (-1e-12, 0) count as zero.
double negativity(const DensityOperator& rho);

/// Ascending partial-transpose spectrum (transpose on the second factor).
RealVector pt_spectrum(const DensityOperator& rho);

/// (1 + 2 N(rho)) / d, the negativity ceiling on the optimal singlet fraction.
double fstar_upper_bound(const DensityOperator& rho);

/// Polar factor U V^dagger of the SVD G = U S V^dagger: the unitary nearest
/// to G in Frobenius norm.
Matrix nearest_unitary(const Matrix& g);

struct FefOptions {
  int restarts = 32;
  int max_iter = 500;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

struct FefResult {
  double value = 0.0;
  Matrix maximizer_unitary;  // W with |Phi> = (W (x) I)|Phi+>
  int restarts_used = 0;
  bool converged = false;
};

/// Fully entangled fraction, max over W of <Phi_W|rho|Phi_W> with
/// |Phi_W> = (W (x) I)|Phi+>.
///
/// Writing w for the row-major flattening of W, the objective is
/// w^dagger rho w / d: a convex quadratic form in W. Each step linearizes it
/// at the current iterate (gradient rho w), and moves to the unitary that
/// maximizes the linearization, which is the polar factor of the reshaped
/// gradient. By convexity the objective never decreases. Restart 0 starts from
/// W = I, the others from Haar unitaries drawn from derive_seed(seed, r). The
/// result is a lower bound on the true maximum.
FefResult fef(const DensityOperator& rho, const FefOptions& opts = {});

/// FEF of the output rho_{psi, map}, computed through the dual map:
/// max over W of <psi|(W (x) I) rho_{Phi+, dual(map)} (W^dagger (x) I)|psi>.
/// Agrees with fef(apply_one_sided(map, psi)) up to optimizer tolerance.
FefResult fef_channel_output(const PureBipartiteState& psi, const KrausChannel& map,
                             const FefOptions& opts = {});

/// Projected ascent for max v^dagger M v over unitaries V, where v is the
/// row-major flattening of the d x d matrix V and M is Hermitian PSD.
FefResult maximize_unitary_quadratic(const Matrix& form, int d, const FefOptions& opts);

}  // namespace entshare
