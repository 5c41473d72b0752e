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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "unimetric/linalg.hpp"

namespace unimetric::acceptance {

struct Options {
  /// Multiplies every tolerance. A non-positive scale makes every tolerance
  /// impossible to meet, which is how the failure path is exercised.
  double tolerance_scale = 1.0;
  std::uint64_t seed = 20261019;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Worst observed error, counts, and similar diagnostics.
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> run_all(const Options& options);

/// One line per criterion followed by a summary line.
void print_report(std::ostream& out, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

// Oracles. These deliberately avoid the spectral-arc machinery so that they
// can check it.

/// Largest d_psi(U, V) found by Riemannian gradient descent of
/// |<psi|U^dag V|psi>|^2 on the unit sphere from `starts` random states.
double maximize_d_psi(const ComplexMatrix& u, const ComplexMatrix& v,
                      std::mt19937_64& rng, int starts = 8);

/// sqrt(1 - min |<a b|W|a b>|^2) over a grid of qubit product states, with
/// `points` near-uniform Bloch-sphere points per factor (W is 4 x 4).
double separable_grid_oracle(const ComplexMatrix& w, std::size_t points = 1000);

}  // namespace unimetric::acceptance
