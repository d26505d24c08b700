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

#include "entshare/omega.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entshare {
namespace {

double sum_squares(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double sum_pairs(const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) s += x[i] * x[j];
  return s;
}

std::string relaxed_violation(int d, const std::vector<double>& x) {
  if (d < 2) return "dimension: d must be >= 2";
  if (static_cast<int>(x.size()) != d - 1) {
    std::ostringstream os;
    os << "length: expected d-1 = " << d - 1 << " components, got " << x.size();
    return os.str();
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
      std::ostringstream os;
      os << "range: x_" << i + 1 << " = " << x[i] << " outside [0,1]";
      return os.str();
    }
  }
  return {};
}

}  // namespace

std::string strict_violation(int d, const std::vector<double>& x) {
  if (d < 3) return "dimension: d must be >= 3";
  if (auto v = relaxed_violation(d, x); !v.empty()) return v;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && x[i] < 1.0)) {
      std::ostringstream os;
      os << "open interval violated: x_" << i + 1 << " = " << x[i] << " not in (0,1)";
      return os.str();
    }
  }
  double spread = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) spread = std::max(spread, std::abs(x[i] - x[j]));
  if (!(spread > kDistinctnessTol)) {
    return "distinctness violated: all x_i equal within 1e-12";
  }
  return {};
}

OmegaParams OmegaParams::make(int d, std::vector<double> x, Mode mode) {
  const std::string violation =
      mode == Mode::strict ? strict_violation(d, x) : relaxed_violation(d, x);
  if (!violation.empty()) throw ParameterError(violation);
  return OmegaParams{d, std::move(x), mode};
}

KrausChannel omega_channel(const OmegaParams& p) {
  const int d = p.d;
  std::vector<Matrix> ops;
  Matrix a0 = Matrix::Zero(d, d);
  a0(0, 0) = 1.0;
  for (int m = 1; m < d; ++m) a0(m, m) = p.x[static_cast<std::size_t>(m - 1)];
  ops.push_back(std::move(a0));
  for (int m = 1; m < d; ++m) {
    const double xm = p.x[static_cast<std::size_t>(m - 1)];
    Matrix am = Matrix::Zero(d, d);
    am(0, m) = std::sqrt(1.0 - xm * xm);
    ops.push_back(std::move(am));
  }
  return kraus_validate(std::move(ops));
}

double omega_lambda_max(const OmegaParams& p) { return (1.0 + sum_squares(p.x)) / p.d; }

double omega_negativity_phiplus(const OmegaParams& p) {
  return (sum_squares(p.x) + sum_pairs(p.x)) / p.d;
}

std::vector<double> omega_pt_spectrum(const OmegaParams& p) {
  const double inv_d = 1.0 / p.d;
  std::vector<double> out(static_cast<std::size_t>(p.d), inv_d);
  for (double xi : p.x) {
    out.push_back(xi * xi * inv_d);
    out.push_back(-xi * xi * inv_d);
  }
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    for (std::size_t j = i + 1; j < p.x.size(); ++j) {
      out.push_back(p.x[i] * p.x[j] * inv_d);
      out.push_back(-p.x[i] * p.x[j] * inv_d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double omega_gap(const OmegaParams& p) {
  return (p.d - 2) * sum_squares(p.x) - 2.0 * sum_pairs(p.x);
}

double omega_phiplus_fidelity(const OmegaParams& p) {
  double s = 1.0;
  for (double xi : p.x) s += xi;
  const double overlap = s / p.d;
  return overlap * overlap;
}

TheoremCertificate theorem1_certificate(const OmegaParams& p, const FefOptions& opts) {
  if (const auto v = strict_violation(p.d, p.x); !v.empty()) throw ParameterError(v);

  const KrausChannel omega = omega_channel(p);
  const ChoiState choi = choi_state(omega);

  TheoremCertificate cert{.params = p, .psi_prime = max_entangled(p.d)};
  cert.lambda_max_closed = omega_lambda_max(p);
  cert.lambda_max_numeric = choi.rho.eigenvalues().maxCoeff();
  cert.negativity_phiplus_closed = omega_negativity_phiplus(p);
  cert.negativity_phiplus_numeric = negativity(choi.rho);

  const std::vector<double> closed_pt = omega_pt_spectrum(p);
  const RealVector numeric_pt = pt_spectrum(choi.rho);
  for (std::size_t k = 0; k < closed_pt.size(); ++k) {
    cert.pt_spectrum_deviation = std::max(
        cert.pt_spectrum_deviation, std::abs(closed_pt[k] - numeric_pt(static_cast<Eigen::Index>(k))));
  }

  cert.fstar_bound_phiplus = (1.0 + 2.0 * cert.negativity_phiplus_closed) / p.d;
  cert.gap = omega_gap(p);

  // psi' comes from the dual map's Choi state.
  const TopEigenpair top = top_choi_eigenpair(dual(omega));
  cert.psi_prime = top.vector;
  cert.psi_prime_degenerate = top.degenerate;
  cert.psi_prime_schmidt_spread = schmidt(cert.psi_prime).spread();

  const DensityOperator output = apply_one_sided(omega, cert.psi_prime);
  const FefResult fr = fef(output, opts);
  cert.fef_psi_prime = fr.value;
  cert.fef_psi_prime_converged = fr.converged;
  cert.negativity_psi_prime = negativity(output);
  cert.fidelity_lower_bound = std::max(cert.lambda_max_numeric, cert.fef_psi_prime);

  cert.verdict_lemma3 = cert.lambda_max_closed > cert.fstar_bound_phiplus;
  cert.verdict_theorem1 = cert.fef_psi_prime > cert.fstar_bound_phiplus &&
                          cert.psi_prime_schmidt_spread > kSchmidtSpreadMin;
  cert.verdict_negativity_corollary = cert.negativity_psi_prime > cert.negativity_phiplus_closed;
  cert.closed_forms_consistent =
      std::abs(cert.lambda_max_closed - cert.lambda_max_numeric) < kClosedFormTol &&
      std::abs(cert.negativity_phiplus_closed - cert.negativity_phiplus_numeric) < kClosedFormTol &&
      cert.pt_spectrum_deviation < kClosedFormTol;
  return cert;
}

}  // namespace entshare
