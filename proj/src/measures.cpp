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

#include "entshare/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "entshare/parallel.hpp"
#include "entshare/random.hpp"

namespace entshare {
namespace {

Vector flatten(const Matrix& m) {
  const Eigen::Index d = m.rows();
  Vector v(d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) v(i * d + j) = m(i, j);
  return v;
}

Matrix unflatten(const Vector& v, int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = v(i * d + j);
  return m;
}

double quadratic(const Matrix& form, const Vector& v) { return v.dot(form * v).real(); }

struct RestartOutcome {
  double value = 0.0;
  Matrix unitary;
  bool converged = false;
};

RestartOutcome ascend(const Matrix& form, int d, Matrix start, const FefOptions& opts) {
  RestartOutcome out;
  out.unitary = std::move(start);
  Vector v = flatten(out.unitary);
  out.value = quadratic(form, v);
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const Vector grad = form * v;
    if (grad.norm() < 1e-300) {
      // Zero gradient: the form vanishes on this iterate's direction.
      out.converged = true;
      break;
    }
    Matrix next = nearest_unitary(unflatten(grad, d));
    Vector next_v = flatten(next);
    const double next_value = quadratic(form, next_v);
    const double gain = next_value - out.value;
    if (gain > 0.0) {
      out.unitary = std::move(next);
      out.value = next_value;
      v = std::move(next_v);
    }
    if (gain < opts.tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace

RealVector pt_spectrum(const DensityOperator& rho) {
  return hermitian_eigenvalues(partial_transpose(rho, Subsystem::second));
}

double negativity(const DensityOperator& rho) {
  const RealVector spectrum = pt_spectrum(rho);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
    if (spectrum(k) <= -kEigenClamp) sum += spectrum(k);
  }
  return std::abs(sum);
}

double fstar_upper_bound(const DensityOperator& rho) {
  if (rho.dim_a() != rho.dim_b()) {
    throw InvalidDimension("fstar_upper_bound needs equal local dimensions");
  }
  return (1.0 + 2.0 * negativity(rho)) / rho.dim_a();
}

Matrix nearest_unitary(const Matrix& g) {
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

FefResult maximize_unitary_quadratic(const Matrix& form, int d, const FefOptions& opts) {
  if (form.rows() != static_cast<Eigen::Index>(d) * d || form.cols() != form.rows()) {
    throw InvalidDimension("quadratic form size does not match d^2");
  }
  const int restarts = std::max(1, opts.restarts);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
  parallel_for(outcomes.size(), [&](std::size_t r) {
    Matrix start;
    if (r == 0) {
      start = Matrix::Identity(d, d);
    } else {
      Rng rng(derive_seed(opts.seed, r));
      start = haar_unitary(d, rng);
    }
    outcomes[r] = ascend(form, d, std::move(start), opts);
  });
  // Ties keep the lowest restart index.
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value > outcomes[best].value) best = r;
  }
  FefResult result;
  result.value = outcomes[best].value;
  result.maximizer_unitary = outcomes[best].unitary;
  result.restarts_used = restarts;
  result.converged = outcomes[best].converged;
  return result;
}

FefResult fef(const DensityOperator& rho, const FefOptions& opts) {
  if (rho.dim_a() != rho.dim_b()) {
    throw InvalidDimension("fef needs equal local dimensions");
  }
  const int d = rho.dim_a();
  const Matrix form = rho.matrix() / static_cast<double>(d);
  FefResult result = maximize_unitary_quadratic(form, d, opts);
  result.value = std::clamp(result.value, 0.0, 1.0);
  return result;
}

FefResult fef_channel_output(const PureBipartiteState& psi, const KrausChannel& map,
                             const FefOptions& opts) {
  if (psi.dim() != map.dim()) {
    throw InvalidDimension("fef_channel_output: state dimension " + std::to_string(psi.dim()) +
                           " != map dimension " + std::to_string(map.dim()));
  }
  const int d = psi.dim();
  const DensityOperator dual_choi = apply_one_sided(dual(map), max_entangled(d));
  // With V = W^dagger, (V (x) I)|psi> has coefficient matrix V Psi, whose
  // row-major flattening is (I (x) Psi^T) vec(V).
  const Matrix psi_t = psi.coefficient_matrix().transpose();
  Matrix l = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) l.block(a * d, a * d, d, d) = psi_t;
  const Matrix form = l.adjoint() * dual_choi.matrix() * l;
  FefResult result = maximize_unitary_quadratic(0.5 * (form + form.adjoint()), d, opts);
  result.maximizer_unitary = result.maximizer_unitary.adjoint().eval();
  result.value = std::clamp(result.value, 0.0, 1.0);
  return result;
}

}  // namespace entshare
