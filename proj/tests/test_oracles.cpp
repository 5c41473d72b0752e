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

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "unimetric/acceptance.hpp"

namespace unimetric {
namespace {

using namespace testing;

TEST(Oracles, DescentFindsNarrowArcSupremum) {
  // Spectrum of U^dag V confined to an arc of length a: sup d_psi = sin(a/2).
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 2 + trial % 4;
    const double arc = uniform(rng, 0.1, kPi - 0.1);
    const double start = uniform(rng, 0, kTwoPi);
    std::vector<double> angles{start, start + arc};
    while (static_cast<Index>(angles.size()) < n) angles.push_back(start + uniform(rng, 0, arc));
    const auto u = haar_random_unitary(n, rng);
    const ComplexMatrix v = u.matrix() * with_spectrum(angles, rng).matrix();
    EXPECT_NEAR(acceptance::maximize_d_psi(u.matrix(), v, rng), std::sin(arc / 2), 1e-6);
  }
}

TEST(Oracles, GridOracleOnKnownProducts) {
  // SWAP: orthogonal product pair gives overlap 0.
  EXPECT_NEAR(acceptance::separable_grid_oracle(swap_gate()), 1.0, 1e-3);
  // I (x) diag(1, e^{it}): per-factor minimum cos(t/2), so d = sin(t/2).
  const double t = 1.2;
  const ComplexMatrix w = kron(identity(2), diag2(1, std::polar(1.0, t)));
  EXPECT_NEAR(acceptance::separable_grid_oracle(w), std::sin(t / 2), 2e-3);
  EXPECT_NEAR(acceptance::separable_grid_oracle(identity(4)), 0.0, 1e-7);
}

}  // namespace
}  // namespace unimetric
