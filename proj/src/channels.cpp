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

#include "entshare/channels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <string>

namespace entshare {
namespace {

struct MaxEntry {
  double value = 0.0;
  int row = 0;
  int col = 0;
};

MaxEntry max_abs_entry(const Matrix& m) {
  MaxEntry best;
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) {
      const double a = std::abs(m(r, c));
      if (a > best.value) best = {a, r, c};
    }
  }
  return best;
}

Matrix completeness_defect(const std::vector<Matrix>& ops) {
  const Eigen::Index d = ops.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& a : ops) sum += a.adjoint() * a;
  return sum - Matrix::Identity(d, d);
}

Matrix unitality_defect(const std::vector<Matrix>& ops) {
  const Eigen::Index d = ops.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& a : ops) sum += a * a.adjoint();
  return sum - Matrix::Identity(d, d);
}

}  // namespace

double KrausChannel::completeness_residual() const {
  return max_abs_entry(completeness_defect(ops_)).value;
}

double KrausChannel::unitality_residual() const {
  return max_abs_entry(unitality_defect(ops_)).value;
}

std::string KrausChannel::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  mix(&dim_, sizeof dim_);
  for (const auto& a : ops_) {
    for (int c = 0; c < a.cols(); ++c) {
      for (int r = 0; r < a.rows(); ++r) {
        // +0.0 so that -0.0 entries hash identically.
        const double parts[2] = {a(r, c).real() + 0.0, a(r, c).imag() + 0.0};
        mix(parts, sizeof parts);
      }
    }
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

KrausChannel kraus_validate(std::vector<Matrix> ops) {
  if (ops.empty()) throw InvalidOperator("Kraus list is empty");
  const Eigen::Index d = ops.front().rows();
  if (d < 1) throw InvalidDimension("Kraus operators must be non-empty");
  for (const auto& a : ops) {
    if (a.rows() != d || a.cols() != d) {
      throw InvalidDimension("Kraus operators must all be square with the same dimension");
    }
  }
  const MaxEntry worst = max_abs_entry(completeness_defect(ops));
  if (worst.value > kCompletenessTol) {
    throw NotTracePreserving("Kraus operators are not trace preserving: residual " +
                                 std::to_string(worst.value) + " at entry (" +
                                 std::to_string(worst.row) + "," + std::to_string(worst.col) + ")",
                             worst.value, worst.row, worst.col);
  }
  return KrausChannel(static_cast<int>(d), std::move(ops), true);
}

bool is_unital(const KrausChannel& ch) { return ch.unitality_residual() < kCompletenessTol; }

KrausChannel dual(const KrausChannel& ch) {
  std::vector<Matrix> ops;
  ops.reserve(ch.size());
  for (const auto& a : ch.kraus_ops()) ops.push_back(a.adjoint());
  // A map's dual is trace preserving iff the map is unital.
  const bool tp = ch.unitality_residual() < kCompletenessTol;
  return KrausChannel(ch.dim(), std::move(ops), tp);
}

DensityOperator apply_one_sided(const KrausChannel& map, const PureBipartiteState& psi) {
  if (map.dim() != psi.dim()) {
    throw InvalidDimension("apply_one_sided: map dimension " + std::to_string(map.dim()) +
                           " != state dimension " + std::to_string(psi.dim()));
  }
  const int d = psi.dim();
  const Matrix coeffs = psi.coefficient_matrix();
  Matrix rho = Matrix::Zero(d * d, d * d);
  for (const auto& k : map.kraus_ops()) {
    // (I (x) K)|psi> has coefficient matrix M K^T.
    const Matrix out = coeffs * k.transpose();
    Vector v(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v(flat_index(i, j, d)) = out(i, j);
    rho.noalias() += v * v.adjoint();
  }
  const auto check = map.trace_preserving() ? DensityOperator::TraceCheck::strict
                                            : DensityOperator::TraceCheck::relaxed;
  return DensityOperator(d, d, std::move(rho), check);
}

ChoiState choi_state(const KrausChannel& ch) {
  const int d = ch.dim();
  DensityOperator rho = apply_one_sided(ch, max_entangled(d));
  const Matrix reduced = partial_trace(rho.matrix(), d, d, Subsystem::second);
  const double defect =
      (reduced - Matrix::Identity(d, d) / static_cast<double>(d)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw InvalidState("Choi state retained marginal deviates from I/d by " +
                       std::to_string(defect));
  }
  return ChoiState{ch.hash(), std::move(rho)};
}

TopEigenpair top_choi_eigenpair(const KrausChannel& map) {
  const int d = map.dim();
  const DensityOperator rho = apply_one_sided(map, max_entangled(d));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix());
  const Eigen::Index n = rho.matrix().rows();
  const double top = solver.eigenvalues()(n - 1);
  Vector v = solver.eigenvectors().col(n - 1);

  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  const Complex phase = v(pivot) / std::abs(v(pivot));
  v /= phase;
  v(pivot) = Complex(v(pivot).real(), 0.0);

  const bool degenerate = n > 1 && (top - solver.eigenvalues()(n - 2)) < 1e-10;
  PureBipartiteState state = PureBipartiteState::normalized(d, v);
  const double residual = (rho.matrix() * state.amplitudes() - top * state.amplitudes()).norm();
  return TopEigenpair{top, std::move(state), degenerate, residual};
}

double choi_lambda_max(const KrausChannel& map) {
  const DensityOperator rho = apply_one_sided(map, max_entangled(map.dim()));
  return rho.eigenvalues().maxCoeff();
}

KrausChannel identity_channel(int d) {
  if (d < 1) throw InvalidDimension("identity channel needs d >= 1");
  return kraus_validate({Matrix::Identity(d, d)});
}

KrausChannel unitary_channel(const Matrix& u) {
  if (unitarity_defect(u) > kUnitaryTol) throw InvalidOperator("unitary_channel: not unitary");
  return kraus_validate({u});
}

KrausChannel pauli_channel(const std::array<double, 4>& weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return w < 0.0; }) ||
      std::abs(total - 1.0) > 1e-12) {
    throw InvalidOperator("Pauli weights must be non-negative and sum to 1");
  }
  const Complex i1(0.0, 1.0);
  Matrix id = Matrix::Identity(2, 2);
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i1, i1, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  const std::array<Matrix, 4> paulis = {id, x, y, z};
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < 4; ++k) ops.push_back(std::sqrt(weights[k]) * paulis[k]);
  return kraus_validate(std::move(ops));
}

KrausChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidOperator("amplitude damping needs gamma in [0,1]");
  Matrix a0 = Matrix::Zero(2, 2);
  Matrix a1 = Matrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - gamma);
  a1(0, 1) = std::sqrt(gamma);
  return kraus_validate({a0, a1});
}

KrausChannel depolarizing(int d, double p) {
  if (d < 1) throw InvalidDimension("depolarizing channel needs d >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidOperator("depolarizing parameter out of range");
  }
  const double pi = std::acos(-1.0);
  const Complex omega = std::polar(1.0, 2.0 * pi / d);
  Matrix shift = Matrix::Zero(d, d);
  Matrix clock = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    shift((k + 1) % d, k) = 1.0;
    clock(k, k) = std::pow(omega, k);
  }
  // (1-p) rho + p I/d = (1 - p + p/d^2) rho + (p/d^2) sum_{(a,b) != 0} W rho W^dagger
  const double n2 = static_cast<double>(d) * d;
  std::vector<Matrix> ops;
  Matrix xa = Matrix::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    Matrix zb = Matrix::Identity(d, d);
    for (int b = 0; b < d; ++b) {
      const double w = (a == 0 && b == 0) ? 1.0 - p + p / n2 : p / n2;
      if (w > 0.0) ops.push_back(std::sqrt(w) * xa * zb);
      zb = (zb * clock).eval();
    }
    xa = (xa * shift).eval();
  }
  return kraus_validate(std::move(ops));
}

KrausChannel measure_prepare(const std::vector<Vector>& prepared) {
  const int d = static_cast<int>(prepared.size());
  if (d < 1) throw InvalidDimension("measure_prepare needs at least one prepared state");
  std::vector<Matrix> ops;
  for (int i = 0; i < d; ++i) {
    if (prepared[static_cast<std::size_t>(i)].size() != d) {
      throw InvalidDimension("prepared states must have dimension d");
    }
    const Vector phi = prepared[static_cast<std::size_t>(i)].normalized();
    Matrix k = Matrix::Zero(d, d);
    k.col(i) = phi;
    ops.push_back(std::move(k));
  }
  return kraus_validate(std::move(ops));
}

KrausChannel random_channel(int d, int num_kraus, Rng& rng) {
  if (d < 1 || num_kraus < 1) throw InvalidDimension("random_channel needs d, num_kraus >= 1");
  const Matrix u = haar_unitary(d * num_kraus, rng);
  std::vector<Matrix> ops;
  for (int k = 0; k < num_kraus; ++k) ops.push_back(u.block(k * d, 0, d, d));
  return kraus_validate(std::move(ops));
}

KrausChannel random_pauli_channel(Rng& rng, std::array<double, 4>* weights_out) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> w{};
  while (true) {
    for (auto& x : w) x = expo(rng);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;
    if (*std::max_element(w.begin(), w.end()) >= 0.5) break;
  }
  // Renormalize once more so the weights sum to 1 at rounding level.
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  if (weights_out) *weights_out = w;
  return pauli_channel(w);
}

}  // namespace entshare
