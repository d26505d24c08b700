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

#include "entshare/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace entshare {

PureBipartiteState::PureBipartiteState(int dim, Vector amplitudes)
    : dim_(dim), amplitudes_(std::move(amplitudes)) {
  if (dim_ < 2) {
    throw InvalidDimension("pure bipartite state needs dim >= 2, got " + std::to_string(dim_));
  }
  if (amplitudes_.size() != static_cast<Eigen::Index>(dim_) * dim_) {
    throw InvalidDimension("amplitude vector length " + std::to_string(amplitudes_.size()) +
                           " does not match d^2 = " + std::to_string(dim_ * dim_));
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw InvalidState("state is not normalized (norm " + std::to_string(norm) + ")");
  }
}

PureBipartiteState PureBipartiteState::normalized(int dim, const Vector& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) {
    throw InvalidState("cannot normalize the zero vector");
  }
  return PureBipartiteState(dim, amplitudes / norm);
}

Matrix PureBipartiteState::coefficient_matrix() const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) m(i, j) = amplitude(i, j);
  }
  return m;
}

DensityOperator PureBipartiteState::projector() const {
  return DensityOperator(dim_, dim_, amplitudes_ * amplitudes_.adjoint());
}

DensityOperator::DensityOperator(int dim_a, int dim_b, Matrix matrix, TraceCheck trace_check)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
  if (dim_a_ < 1 || dim_b_ < 1) {
    throw InvalidDimension("density operator factors must be positive");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a_) * dim_b_;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw InvalidDimension("density matrix is " + std::to_string(matrix_.rows()) + "x" +
                           std::to_string(matrix_.cols()) + ", expected " + std::to_string(n));
  }
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw InvalidState("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  // Symmetrize away sub-tolerance noise so downstream eigensolvers see an
  // exactly Hermitian matrix.
  matrix_ = (0.5 * (matrix_ + matrix_.adjoint())).eval();
  if (trace_check == TraceCheck::strict && std::abs(trace() - 1.0) > kTraceTol) {
    throw InvalidState("density matrix trace is " + std::to_string(trace()));
  }
  const double min_eig = hermitian_eigenvalues(matrix_)(0);
  if (min_eig < -kPsdTol) {
    throw InvalidState("density matrix is not PSD (min eigenvalue " + std::to_string(min_eig) + ")");
  }
}

DensityOperator DensityOperator::maximally_mixed(int dim_a, int dim_b) {
  const int n = dim_a * dim_b;
  return DensityOperator(dim_a, dim_b, Matrix::Identity(n, n) / static_cast<double>(n));
}

RealVector DensityOperator::eigenvalues() const { return hermitian_eigenvalues(matrix_); }

double SchmidtDecomposition::spread() const {
  if (coefficients.empty()) return 0.0;
  return coefficients.front() - coefficients.back();
}

bool SchmidtDecomposition::is_maximally_entangled(double tol) const {
  const double target = 1.0 / std::sqrt(static_cast<double>(coefficients.size()));
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [&](double c) { return std::abs(c - target) < tol; });
}

PureBipartiteState max_entangled(int d) {
  if (d < 2) {
    throw InvalidDimension("maximally entangled state needs d >= 2, got " + std::to_string(d));
  }
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) amps(flat_index(i, i, d)) = a;
  return PureBipartiteState(d, std::move(amps));
}

double unitarity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

PureBipartiteState mes_from_unitary(const Matrix& unitary) {
  if (unitary.rows() != unitary.cols() || unitary.rows() < 2) {
    throw InvalidOperator("mes_from_unitary needs a square matrix of size >= 2");
  }
  const double defect = unitarity_defect(unitary);
  if (defect > kUnitaryTol) {
    throw InvalidOperator("matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
  const int d = static_cast<int>(unitary.rows());
  // (W (x) I)|Phi+> has amplitude W(k, i) / sqrt(d) at (k, i).
  Vector amps(static_cast<Eigen::Index>(d) * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) amps(flat_index(k, i, d)) = a * unitary(k, i);
  }
  return PureBipartiteState::normalized(d, amps);
}

SchmidtDecomposition schmidt(const PureBipartiteState& state) {
  const Matrix m = state.coefficient_matrix();
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtDecomposition out;
  const auto& s = svd.singularValues();
  const Matrix& u = svd.matrixU();
  const Matrix& v = svd.matrixV();
  // M = U S V^dagger, so psi = sum_k s_k u_k (x) conj(v_k).
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    out.coefficients.push_back(s(k));
    out.left_basis.push_back(u.col(k));
    out.right_basis.push_back(v.col(k).conjugate());
  }
  return out;
}

Matrix partial_transpose(const Matrix& op, int dim_a, int dim_b, Subsystem subsystem) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (op.rows() != n || op.cols() != n) {
    throw InvalidDimension("partial_transpose: operator size does not match factors");
  }
  Matrix out(n, n);
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_b; ++j) {
      for (int k = 0; k < dim_a; ++k) {
        for (int l = 0; l < dim_b; ++l) {
          const int row = flat_index(i, j, dim_b);
          const int col = flat_index(k, l, dim_b);
          if (subsystem == Subsystem::second) {
            out(row, col) = op(flat_index(i, l, dim_b), flat_index(k, j, dim_b));
          } else {
            out(row, col) = op(flat_index(k, j, dim_b), flat_index(i, l, dim_b));
          }
        }
      }
    }
  }
  return out;
}

Matrix partial_transpose(const DensityOperator& rho, Subsystem subsystem) {
  return partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b(), subsystem);
}

Matrix partial_trace(const Matrix& op, int dim_a, int dim_b, Subsystem traced) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (op.rows() != n || op.cols() != n) {
    throw InvalidDimension("partial_trace: operator size does not match factors");
  }
  if (traced == Subsystem::second) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int k = 0; k < dim_a; ++k)
        for (int j = 0; j < dim_b; ++j)
          out(i, k) += op(flat_index(i, j, dim_b), flat_index(k, j, dim_b));
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (int j = 0; j < dim_b; ++j)
    for (int l = 0; l < dim_b; ++l)
      for (int i = 0; i < dim_a; ++i)
        out(j, l) += op(flat_index(i, j, dim_b), flat_index(i, l, dim_b));
  return out;
}

double fidelity_with(const DensityOperator& rho, const PureBipartiteState& phi) {
  if (rho.dim_a() != phi.dim() || rho.dim_b() != phi.dim()) {
    throw InvalidDimension("fidelity_with: state and density operator dimensions differ");
  }
  const Vector& v = phi.amplitudes();
  const double value = v.dot(rho.matrix() * v).real();
  return std::clamp(value, 0.0, 1.0);
}

RealVector hermitian_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace entshare
