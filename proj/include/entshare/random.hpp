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
#include <random>

#include "entshare/states.hpp"

namespace entshare {

using Rng = std::mt19937_64;

/// Counter-derived stream seed (splitmix64 finalizer of seed + counter).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter);

/// d x d matrix of i.i.d. standard complex Gaussians.
Matrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal pushed into Q.
Matrix haar_unitary(int d, Rng& rng);

/// Uniformly distributed pure state on C^d (x) C^d.
PureBipartiteState random_pure_state(int d, Rng& rng);

/// Random mixed state G G^dagger / tr(G G^dagger) with G Ginibre d^2 x rank.
DensityOperator random_density(int d, int rank, Rng& rng);

}  // namespace entshare
