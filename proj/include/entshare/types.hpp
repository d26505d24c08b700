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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace entshare {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Bipartite index convention: (i, j) on a dim_a x dim_b space maps to the
// flat index i * dim_b + j. The first factor is the retained subsystem, the
// second is the one sent through the channel.
inline constexpr int flat_index(int i, int j, int dim_b) { return i * dim_b + j; }

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
public:
  using Error::Error;
};

class InvalidOperator : public Error {
public:
  using Error::Error;
};

class InvalidState : public Error {
public:
  using Error::Error;
};

/// Kraus set fails sum_i A_i^dagger A_i = I; carries the max-entry residual.
class NotTracePreserving : public Error {
public:
  NotTracePreserving(const std::string& what, double residual, int row, int col)
      : Error(what), residual_(residual), row_(row), col_(col) {}
  double residual() const { return residual_; }
  int row() const { return row_; }
  int col() const { return col_; }

private:
  double residual_;
  int row_;
  int col_;
};

/// Omega parameters that violate a structural clause; the message names it.
class ParameterError : public Error {
public:
  using Error::Error;
};

// Tolerances shared across modules.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kEigenClamp = 1e-12;
inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kMaxEntangledTol = 1e-8;

}  // namespace entshare
