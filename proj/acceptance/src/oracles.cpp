// Copyright 2026 The unimetric Authors
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

#include <algorithm>
#include <cmath>

#include "unimetric/acceptance.hpp"

namespace unimetric::acceptance {

namespace {

// |<psi|W|psi>|^2 and its Riemannian gradient on the unit sphere.
double overlap_sq(const ComplexMatrix& w, const ComplexVector& psi,
                  ComplexVector* grad) {
  const ComplexVector wp = w * psi;
  const Complex z = psi.dot(wp);
  if (grad != nullptr) {
    const ComplexVector g = 2.0 * (z * (w.adjoint() * psi) + std::conj(z) * wp);
    *grad = g - psi.dot(g).real() * psi;
  }
  return std::norm(z);
}

double descend(const ComplexMatrix& w, ComplexVector psi) {
  ComplexVector grad;
  double f = overlap_sq(w, psi, &grad);
  double step = 1.0;
  for (int it = 0; it < 20000 && f > 0.0; ++it) {
    const double g2 = grad.squaredNorm();
    if (g2 < 1e-30) break;
    // Armijo backtracking along the retraction psi - t g, renormalized.
    bool moved = false;
    for (int tries = 0; tries < 60; ++tries) {
      ComplexVector trial = psi - step * grad;
      trial.normalize();
      ComplexVector trial_grad;
      const double ft = overlap_sq(w, trial, &trial_grad);
      if (ft <= f - 1e-4 * step * g2) {
        psi = std::move(trial);
        grad = std::move(trial_grad);
        f = ft;
        step = std::min(step * 2.0, 4.0);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return f;
}

}  // namespace

double maximize_d_psi(const ComplexMatrix& u, const ComplexMatrix& v,
                      std::mt19937_64& rng, int starts) {
  const ComplexMatrix w = u.adjoint() * v;
  double best = 1.0;
  for (int s = 0; s < starts; ++s) {
    best = std::min(best, descend(w, random_unit_vector(w.rows(), rng)));
  }
  return std::sqrt(std::clamp(1.0 - best, 0.0, 1.0));
}

double separable_grid_oracle(const ComplexMatrix& w, std::size_t points) {
  // Fibonacci lattice on the Bloch sphere.
  std::vector<Eigen::Vector2cd> states;
  states.reserve(points);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < points; ++k) {
    const double zc = 1.0 - (2.0 * static_cast<double>(k) + 1.0) /
                                static_cast<double>(points);
    const double theta = std::acos(zc);
    const double phi = golden * static_cast<double>(k);
    states.emplace_back(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
  }
  // <a b|W|a b> = <b|M_a|b> with M_a = sum_{ij} conj(a_i) a_j W_{(i,.),(j,.)}.
  const Eigen::Matrix4cd w4 = w;
  double best = kInfinity;
  for (const auto& a : states) {
    Eigen::Matrix2cd ma = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        ma += std::conj(a(i)) * a(j) * w4.block<2, 2>(2 * i, 2 * j);
      }
    }
    for (const auto& b : states) {
      best = std::min(best, std::norm(b.dot(ma * b)));
    }
  }
  return std::sqrt(std::clamp(1.0 - best, 0.0, 1.0));
}

}  // namespace unimetric::acceptance
