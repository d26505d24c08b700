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

#include <cmath>

#include "entshare/channels.hpp"
#include "entshare/measures.hpp"
#include "entshare/omega.hpp"
#include "test_util.hpp"

using namespace entshare;
using entshare::testing::kron;
using entshare::testing::max_abs;

namespace {

KrausChannel omega_05_09() { return omega_channel(OmegaParams::make(3, {0.5, 0.9})); }

}  // namespace

TEST_CASE("kraus_validate") {
  SUBCASE("identity") {
    const auto ch = kraus_validate({Matrix::Identity(3, 3)});
    CHECK(ch.trace_preserving());
    CHECK(is_unital(ch));
  }
  SUBCASE("omega d=3") { CHECK(omega_05_09().completeness_residual() < 1e-12); }
  SUBCASE("truncated amplitude damping reports the residual and its entry") {
    try {
      kraus_validate({testing::diag({1.0, 0.8})});
      FAIL("expected NotTracePreserving");
    } catch (const NotTracePreserving& e) {
      CHECK(e.residual() == doctest::Approx(0.36).epsilon(1e-12));
      CHECK(e.row() == 1);
      CHECK(e.col() == 1);
    }
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(kraus_validate({}), InvalidOperator);
    CHECK_THROWS_AS(kraus_validate({Matrix::Identity(2, 2), Matrix::Zero(3, 3)}), InvalidDimension);
    CHECK_THROWS_AS(kraus_validate({Matrix::Identity(2, 3)}), InvalidDimension);
  }
}

TEST_CASE("is_unital") {
  CHECK(is_unital(identity_channel(3)));
  CHECK_FALSE(is_unital(omega_05_09()));
  // sum A A^dagger for Omega is diag(1 + sum(1 - x_i^2), x_1^2, x_2^2).
  Matrix sum = Matrix::Zero(3, 3);
  const auto omega = omega_05_09();
  for (const auto& a : omega.kraus_ops()) sum += a * a.adjoint();
  CHECK(max_abs(sum - testing::diag({1.94, 0.25, 0.81})) < 1e-15);
  CHECK(is_unital(pauli_channel({0.3, 0.7, 0.0, 0.0})));
  CHECK_FALSE(is_unital(amplitude_damping(0.36)));
}

TEST_CASE("dual map") {
  SUBCASE("identity is self-dual") {
    const auto du = dual(identity_channel(3));
    CHECK(du.trace_preserving());
    CHECK(max_abs(du.kraus_ops()[0] - Matrix::Identity(3, 3)) == 0.0);
  }
  SUBCASE("unitary channel") {
    Rng rng(1);
    const Matrix u = haar_unitary(3, rng);
    CHECK(max_abs(dual(unitary_channel(u)).kraus_ops()[0] - u.adjoint()) == 0.0);
  }
  SUBCASE("nonunital source gives a non-trace-preserving dual") {
    const auto du = dual(omega_05_09());
    CHECK_FALSE(du.trace_preserving());
    Matrix expected = Matrix::Zero(3, 3);
    expected(1, 0) = std::sqrt(0.75);
    CHECK(max_abs(du.kraus_ops()[1] - expected) < 1e-15);
    CHECK(choi_lambda_max(du) == doctest::Approx(choi_lambda_max(omega_05_09())).epsilon(1e-12));
  }
  SUBCASE("dual of dual is the original") {
    Rng rng(2);
    const auto ch = random_channel(3, 3, rng);
    const auto dd = dual(dual(ch));
    CHECK(dd.trace_preserving());
    for (std::size_t k = 0; k < ch.size(); ++k) {
      CHECK((dd.kraus_ops()[k].array() == ch.kraus_ops()[k].array()).all());
    }
  }
}

TEST_CASE("apply_one_sided") {
  SUBCASE("identity on Phi+") {
    const auto rho = apply_one_sided(identity_channel(3), max_entangled(3));
    CHECK(max_abs(rho.matrix() - max_entangled(3).projector().matrix()) < 1e-15);
  }
  SUBCASE("omega on Phi+: eigenvalues from the orthogonal decomposition") {
    const auto rho = apply_one_sided(omega_05_09(), max_entangled(3));
    const RealVector ev = rho.eigenvalues();
    // |phi_0|^2 = 2.06/3, |phi_m|^2 = (1 - x_m^2)/3, rest zero.
    CHECK(ev(8) == doctest::Approx(2.06 / 3).epsilon(1e-12));
    CHECK(ev(7) == doctest::Approx(0.75 / 3).epsilon(1e-12));
    CHECK(ev(6) == doctest::Approx(0.19 / 3).epsilon(1e-12));
    CHECK(std::abs(ev(5)) < 1e-12);
  }
  SUBCASE("product input stays separable") {
    Rng rng(8);
    Vector v = Vector::Zero(9);
    v(0) = 1.0;
    const PureBipartiteState prod(3, v);
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(negativity(apply_one_sided(random_channel(3, 2, rng), prod)) == 0.0);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(apply_one_sided(identity_channel(2), max_entangled(3)), InvalidDimension);
  }
}

TEST_CASE("channel properties on random dilation channels") {
  Rng rng(42);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> count(2, std::max(2, d));
      const auto ch = random_channel(d, count(rng), rng);
      CHECK(ch.completeness_residual() < 1e-12);

      const auto psi = random_pure_state(d, rng);
      const auto out = apply_one_sided(ch, psi);
      CHECK(std::abs(out.trace() - 1.0) < 1e-12);

      const Matrix lift = kron(haar_unitary(d, rng), Matrix::Identity(d, d));
      const auto rotated = PureBipartiteState::normalized(d, lift * psi.amplitudes());
      CHECK(max_abs(apply_one_sided(ch, rotated).matrix() - lift * out.matrix() * lift.adjoint()) < 1e-12);

      CHECK(std::abs(choi_lambda_max(dual(ch)) - choi_lambda_max(ch)) < 1e-9);
    }
  }
}

TEST_CASE("choi_state") {
  const auto c = choi_state(omega_05_09());
  CHECK(c.channel_hash == omega_05_09().hash());
  CHECK(c.channel_hash != identity_channel(3).hash());
  CHECK(std::abs(c.rho.trace() - 1.0) < 1e-12);
  const Matrix reduced = partial_trace(c.rho.matrix(), 3, 3, Subsystem::second);
  CHECK(max_abs(reduced - Matrix::Identity(3, 3) / 3.0) < 1e-12);
}

TEST_CASE("top_choi_eigenpair") {
  SUBCASE("identity") {
    const auto top = top_choi_eigenpair(identity_channel(3));
    CHECK(top.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(std::abs(top.vector.amplitudes().dot(max_entangled(3).amplitudes())) - 1.0) < 1e-12);
    CHECK_FALSE(top.degenerate);
  }
  SUBCASE("omega dual gives the diagonal ket") {
    const auto top = top_choi_eigenpair(dual(omega_05_09()));
    CHECK(top.value == doctest::Approx(2.06 / 3).epsilon(1e-12));
    const auto expected = testing::diagonal_ket({1.0, 0.5, 0.9});
    CHECK((top.vector.amplitudes() - expected.amplitudes()).norm() < 1e-12);
    CHECK(top.residual < 1e-10);
    CHECK_FALSE(top.degenerate);
  }
  SUBCASE("fully depolarizing qubit channel is degenerate") {
    const auto top = top_choi_eigenpair(depolarizing(2, 1.0));
    CHECK(top.value == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(top.degenerate);
    CHECK(top.residual < 1e-10);
  }
}

TEST_CASE("standard channels are valid") {
  CHECK(depolarizing(3, 0.4).completeness_residual() < 1e-12);
  CHECK(is_unital(depolarizing(3, 0.4)));
  CHECK(amplitude_damping(0.36).completeness_residual() < 1e-15);
  Vector plus(2);
  plus << 1.0, 1.0;
  Vector zero(2);
  zero << 1.0, 0.0;
  CHECK(measure_prepare({zero, plus}).completeness_residual() < 1e-15);
  CHECK_THROWS_AS(pauli_channel({0.5, 0.6, 0.0, 0.0}), InvalidOperator);
  Rng rng(0);
  std::array<double, 4> w{};
  random_pauli_channel(rng, &w);
  CHECK(*std::max_element(w.begin(), w.end()) >= 0.5);
}
