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
#include <utility>
#include <vector>

#include "entshare/channels.hpp"

namespace entshare {

struct SearchOptions {
  int restarts = 64;
  int max_iter = 2000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool record_trace = false;
};

struct SearchResult {
  PureBipartiteState best_state;
  double best_value = 0.0;
  int restarts = 0;
  bool converged = false;
  /// (iteration, value) for the winning restart when requested.
  std::vector<std::pair<int, double>> trace;
  std::uint64_t seed = 0;
};

/// Input maximizing <Phi+|rho_{psi, map}|Phi+> over pure psi: the top
/// eigenvector of the dual map's Choi state. Exact, no search involved.
SearchResult best_phiplus_fidelity_input(const KrausChannel& map);

/// Multi-start local ascent of N(rho_{psi, map}) over pure inputs.
///
/// The state is parameterized by the real and imaginary parts of its d^2
/// amplitudes and renormalized on every evaluation. Each sweep probes every
/// coordinate at +-h, fits a parabola through the three values and accepts the
/// best of the probes and the parabola vertex. The step shrinks when a sweep
/// gains less than tol; a restart ends when h drops below 1e-7 (converged) or
/// after max_iter sweeps. Restarts: Phi+, then the best Phi+-fidelity input,
/// then Haar-random kets from derive_seed(seed, r). The returned value is a
/// lower bound on the channel's optimal negativity.
SearchResult maximize_negativity_input(const KrausChannel& map, const SearchOptions& opts = {});

/// Exact optimal singlet fraction of a qubit channel, (1 + 2 N(rho_{Phi+})) / 2.
/// Throws InvalidDimension for d != 2.
double qubit_optimal_fidelity(const KrausChannel& map);

}  // namespace entshare
