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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "entshare/random.hpp"
#include "entshare/states.hpp"
#include "test_util.hpp"

using namespace entshare;
using entshare::testing::kron;
using entshare::testing::max_abs;

TEST_CASE("max_entangled amplitudes") {
  const auto phi2 = max_entangled(2);
  CHECK(phi2.amplitudes()(0).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(phi2.amplitudes()(1)) == 0.0);
  CHECK(std::abs(phi2.amplitudes()(2)) == 0.0);
  CHECK(phi2.amplitudes()(3).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));

  const auto phi3 = max_entangled(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double expected = i == j ? 1 / std::sqrt(3.0) : 0.0;
      CHECK(std::abs(phi3.amplitude(i, j) - expected) < 1e-15);
    }
  }
  const auto s = schmidt(phi3);
  for (double c : s.coefficients) CHECK(std::abs(c - 1 / std::sqrt(3.0)) < 1e-12);
  CHECK(s.is_maximally_entangled());

  CHECK_THROWS_AS(max_entangled(1), InvalidDimension);
}

TEST_CASE("pure state validation") {
  CHECK_THROWS_AS(PureBipartiteState(1, Vector::Ones(1)), InvalidDimension);
  CHECK_THROWS_AS(PureBipartiteState(2, Vector::Ones(3)), InvalidDimension);
  CHECK_THROWS_AS(PureBipartiteState(2, Vector::Ones(4)), InvalidState);
  CHECK_THROWS_AS(PureBipartiteState::normalized(2, Vector::Zero(4)), InvalidState);
}

TEST_CASE("mes_from_unitary") {
  SUBCASE("identity gives Phi+") {
    const auto s = mes_from_unitary(Matrix::Identity(3, 3));
    CHECK((s.amplitudes() - max_entangled(3).amplitudes()).norm() < 1e-15);
  }
  SUBCASE("phase flip") {
    const auto s = mes_from_unitary(testing::diag({1.0, -1.0}));
    const double a = 1 / std::sqrt(2.0);
    CHECK(std::abs(s.amplitude(0, 0) - a) < 1e-15);
    CHECK(std::abs(s.amplitude(1, 1) + a) < 1e-15);
    CHECK(std::abs(s.amplitude(0, 1)) == 0.0);
  }
  SUBCASE("Haar unitary keeps flat Schmidt spectrum") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = schmidt(mes_from_unitary(haar_unitary(3, rng)));
      for (double c : s.coefficients) CHECK(std::abs(c - 1 / std::sqrt(3.0)) < 1e-10);
    }
  }
  SUBCASE("non-unitary rejected") {
    CHECK_THROWS_AS(mes_from_unitary(testing::diag({1.0, 0.5})), InvalidOperator);
  }
}

TEST_CASE("schmidt decomposition") {
  SUBCASE("product state") {
    Vector v = Vector::Zero(9);
    v(0) = 1.0;
    const auto s = schmidt(PureBipartiteState(3, v));
    CHECK(s.coefficients[0] == doctest::Approx(1.0));
    CHECK(s.coefficients[1] == doctest::Approx(0.0));
    CHECK_FALSE(s.is_maximally_entangled());
  }
  SUBCASE("diagonal ket, squared coefficients from numpy SVD oracle") {
    const auto s = schmidt(testing::diagonal_ket({1.0, 0.5, 0.9}));
    CHECK(s.coefficients[0] * s.coefficients[0] == doctest::Approx(0.48543689320388345).epsilon(1e-12));
    CHECK(s.coefficients[1] * s.coefficients[1] == doctest::Approx(0.3932038834951456).epsilon(1e-12));
    CHECK(s.coefficients[2] * s.coefficients[2] == doctest::Approx(0.12135922330097086).epsilon(1e-12));
  }
  SUBCASE("Phi+ d=4") {
    for (double c : schmidt(max_entangled(4)).coefficients) CHECK(std::abs(c - 0.5) < 1e-12);
  }
  SUBCASE("reconstruction and orthonormality on random states") {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const auto psi = random_pure_state(4, rng);
      const auto s = schmidt(psi);
      Vector rebuilt = Vector::Zero(16);
      double sum_sq = 0.0;
      for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            rebuilt(flat_index(i, j, 4)) += s.coefficients[k] * s.left_basis[k](i) * s.right_basis[k](j);
        sum_sq += s.coefficients[k] * s.coefficients[k];
        if (k > 0) CHECK(s.coefficients[k] <= s.coefficients[k - 1]);
        for (std::size_t l = 0; l < s.coefficients.size(); ++l) {
          const double expect = k == l ? 1.0 : 0.0;
          CHECK(std::abs(s.left_basis[k].dot(s.left_basis[l]) - expect) < 1e-10);
          CHECK(std::abs(s.right_basis[k].dot(s.right_basis[l]) - expect) < 1e-10);
        }
      }
      CHECK(std::abs(sum_sq - 1.0) < 1e-10);
      CHECK((rebuilt - psi.amplitudes()).norm() < 1e-10);
    }
  }
}

TEST_CASE("schmidt coefficients are local-unitary invariant") {
  Rng rng(5);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto psi = random_pure_state(d, rng);
      const Matrix lu = kron(haar_unitary(d, rng), haar_unitary(d, rng));
      const auto rotated = PureBipartiteState::normalized(d, lu * psi.amplitudes());
      const auto a = schmidt(psi).coefficients;
      const auto b = schmidt(rotated).coefficients;
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
    }
  }
}

TEST_CASE("density operator validation") {
  CHECK_NOTHROW(DensityOperator::maximally_mixed(3, 3));
  Matrix not_herm = Matrix::Identity(4, 4) / 4.0;
  not_herm(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS(DensityOperator(2, 2, not_herm), InvalidState);
  CHECK_THROWS_AS(DensityOperator(2, 2, Matrix::Identity(4, 4)), InvalidState);
  CHECK_NOTHROW(DensityOperator(2, 2, Matrix::Identity(4, 4), DensityOperator::TraceCheck::relaxed));
  Matrix neg = Matrix::Identity(4, 4) / 2.0;
  neg(3, 3) = -0.5;
  CHECK_THROWS_AS(DensityOperator(2, 2, neg), InvalidState);
  CHECK_THROWS_AS(DensityOperator(2, 2, Matrix::Identity(3, 3) / 3.0), InvalidDimension);
}

TEST_CASE("partial transpose") {
  Rng rng(9);
  SUBCASE("product state transposes only the second factor") {
    const Matrix ga = ginibre(2, 2, rng);
    const Matrix gb = ginibre(3, 3, rng);
    Matrix ra = ga * ga.adjoint();
    Matrix rb = gb * gb.adjoint();
    ra /= ra.trace();
    rb /= rb.trace();
    const DensityOperator rho(2, 3, kron(ra, rb));
    CHECK(max_abs(partial_transpose(rho, Subsystem::second) - kron(ra, rb.transpose())) < 1e-15);
    CHECK(max_abs(partial_transpose(rho, Subsystem::first) - kron(ra.transpose(), rb)) < 1e-15);
  }
  SUBCASE("Phi+ d=3 spectrum is +-1/3") {
    const RealVector ev = hermitian_eigenvalues(partial_transpose(max_entangled(3).projector(), Subsystem::second));
    int neg = 0, pos = 0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
      CHECK(std::abs(std::abs(ev(k)) - 1.0 / 3.0) < 1e-12);
      (ev(k) < 0 ? neg : pos)++;
    }
    CHECK(neg == 3);
    CHECK(pos == 6);
  }
  SUBCASE("involution, trace, hermiticity and subsystem-independent spectrum") {
    for (int d = 2; d <= 4; ++d) {
      const DensityOperator rho = random_density(d, 3, rng);
      for (auto sub : {Subsystem::first, Subsystem::second}) {
        const Matrix pt = partial_transpose(rho, sub);
        CHECK((partial_transpose(pt, d, d, sub).array() == rho.matrix().array()).all());
        CHECK(std::abs(pt.trace() - Complex(1.0, 0.0)) < 1e-12);
        CHECK(max_abs(pt - pt.adjoint()) < 1e-15);
      }
      const RealVector a = hermitian_eigenvalues(partial_transpose(rho, Subsystem::first));
      const RealVector b = hermitian_eigenvalues(partial_transpose(rho, Subsystem::second));
      CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("partial trace") {
  Rng rng(21);
  const Matrix ga = ginibre(2, 2, rng);
  const Matrix gb = ginibre(3, 3, rng);
  Matrix ra = ga * ga.adjoint();
  Matrix rb = gb * gb.adjoint();
  ra /= ra.trace();
  rb /= rb.trace();
  const Matrix prod = kron(ra, rb);
  CHECK(max_abs(partial_trace(prod, 2, 3, Subsystem::second) - ra) < 1e-14);
  CHECK(max_abs(partial_trace(prod, 2, 3, Subsystem::first) - rb) < 1e-14);
}

TEST_CASE("fidelity_with") {
  const auto phi = max_entangled(3);
  CHECK(fidelity_with(phi.projector(), phi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity_with(DensityOperator::maximally_mixed(3, 3), phi) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  CHECK_THROWS_AS(fidelity_with(DensityOperator::maximally_mixed(2, 2), phi), InvalidDimension);

  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = random_pure_state(3, rng);
    const auto other = random_pure_state(3, rng);
    CHECK(std::abs(fidelity_with(psi.projector(), psi) - 1.0) < 1e-12);
    const double f = fidelity_with(random_density(3, 2, rng), other);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(fidelity_with(psi.projector(), other) < 1.0 - 1e-6);
  }
}
