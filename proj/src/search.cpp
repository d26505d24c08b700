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

#include "entshare/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entshare/measures.hpp"
#include "entshare/parallel.hpp"

namespace entshare {
namespace {

constexpr double kInitialStep = 0.1;
constexpr double kMinStep = 1e-7;

RealVector to_real(const Vector& v) {
  RealVector r(2 * v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    r(2 * k) = v(k).real();
    r(2 * k + 1) = v(k).imag();
  }
  return r;
}

Vector to_complex(const RealVector& r) {
  Vector v(r.size() / 2);
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Complex(r(2 * k), r(2 * k + 1));
  return v;
}

struct Ascent {
  RealVector point;
  double value = 0.0;
  bool converged = false;
  std::vector<std::pair<int, double>> trace;
};

class NegativityObjective {
public:
  NegativityObjective(const KrausChannel& map) : map_(map) {}

  double operator()(const RealVector& r) const {
    const Vector v = to_complex(r);
    const double norm = v.norm();
    if (!(norm > 1e-150)) return 0.0;
    return negativity(apply_one_sided(map_, PureBipartiteState::normalized(map_.dim(), v)));
  }

private:
  const KrausChannel& map_;
};

Ascent coordinate_ascent(const NegativityObjective& f, RealVector start, const SearchOptions& opts) {
  Ascent out;
  out.point = std::move(start);
  out.point.normalize();
  out.value = f(out.point);
  if (opts.record_trace) out.trace.emplace_back(0, out.value);
  double h = kInitialStep;
  for (int sweep = 1; sweep <= opts.max_iter; ++sweep) {
    const double before = out.value;
    for (Eigen::Index c = 0; c < out.point.size(); ++c) {
      const double x0 = out.point(c);
      RealVector probe = out.point;
      probe(c) = x0 + h;
      const double fp = f(probe);
      probe(c) = x0 - h;
      const double fm = f(probe);
      double best_x = x0;
      double best_f = out.value;
      if (fp > best_f) { best_x = x0 + h; best_f = fp; }
      if (fm > best_f) { best_x = x0 - h; best_f = fm; }
      const double curvature = fp - 2.0 * out.value + fm;
      if (curvature < 0.0) {
        // Vertex of the parabola through the three probes, kept within 2h.
        double offset = 0.5 * h * (fm - fp) / curvature;
        offset = std::clamp(offset, -2.0 * h, 2.0 * h);
        probe(c) = x0 + offset;
        const double fv = f(probe);
        if (fv > best_f) { best_x = x0 + offset; best_f = fv; }
      }
      if (best_f > out.value) {
        // f is scale invariant, so the probe value stands after normalizing.
        out.point(c) = best_x;
        out.point.normalize();
        out.value = best_f;
      }
    }
    if (opts.record_trace) out.trace.emplace_back(sweep, out.value);
    if (out.value - before < opts.tol) {
      h *= 0.5;
      if (h < kMinStep) {
        out.converged = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

SearchResult best_phiplus_fidelity_input(const KrausChannel& map) {
  TopEigenpair top = top_choi_eigenpair(dual(map));
  return SearchResult{.best_state = std::move(top.vector),
                      .best_value = top.value,
                      .restarts = 0,
                      .converged = true,
                      .trace = {},
                      .seed = 0};
}

SearchResult maximize_negativity_input(const KrausChannel& map, const SearchOptions& opts) {
  const int d = map.dim();
  const int restarts = std::max(2, opts.restarts);
  const Vector phi_plus = max_entangled(d).amplitudes();
  const Vector psi_prime = best_phiplus_fidelity_input(map).best_state.amplitudes();
  const NegativityObjective objective(map);

  std::vector<Ascent> runs(static_cast<std::size_t>(restarts));
  parallel_for(runs.size(), [&](std::size_t r) {
    RealVector start;
    if (r == 0) {
      start = to_real(phi_plus);
    } else if (r == 1) {
      start = to_real(psi_prime);
    } else {
      Rng rng(derive_seed(opts.seed, r));
      start = to_real(random_pure_state(d, rng).amplitudes());
    }
    runs[r] = coordinate_ascent(objective, std::move(start), opts);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].value > runs[best].value) best = r;
  }
  auto state = PureBipartiteState::normalized(d, to_complex(runs[best].point));
  // Re-evaluate on the stored state so best_value matches it exactly.
  const double value = negativity(apply_one_sided(map, state));
  return SearchResult{.best_state = std::move(state),
                      .best_value = value,
                      .restarts = restarts,
                      .converged = runs[best].converged,
                      .trace = std::move(runs[best].trace),
                      .seed = opts.seed};
}

double qubit_optimal_fidelity(const KrausChannel& map) {
  if (map.dim() != 2) {
    throw InvalidDimension("qubit_optimal_fidelity only holds for d = 2, got d = " +
                           std::to_string(map.dim()));
  }
  return (1.0 + 2.0 * negativity(choi_state(map).rho)) / 2.0;
}

}  // namespace entshare
