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
#include <optional>

#include "unimetric/errors.hpp"
#include "unimetric/linalg.hpp"

namespace unimetric {

/// Search posed as approximating a target rotation U by powers V^k, all
/// inside the plane spanned by a marked state |m> and its complement |r>.
/// The start state is |s> = sin(alpha)|m> + e^{i theta} cos(alpha)|r>.
struct SearchProblem {
  /// Overlap angle, sin(alpha) = |<m|s>|; in (0, pi/2).
  double alpha = 0.0;
  /// Relative phase of the start state.
  double theta = 0.0;
  /// Rotation per step; in (0, pi/2).
  double gamma = 0.0;
  /// Search space size when alpha = asin(1/sqrt(N)).
  std::optional<std::uint64_t> n;
};

/// Throws InvalidArgument ("InvalidAngles") when the angles are out of range.
SearchProblem make_search_problem(double alpha, double theta, double gamma);
/// alpha = asin(1/sqrt(N)); gamma defaults to alpha. N >= 2.
SearchProblem search_problem_from_n(std::uint64_t n, double theta,
                                    std::optional<double> gamma = std::nullopt);
void validate(const SearchProblem& p);

struct SearchOperators {
  /// Rotation in the (|m>, |r>) plane taking |s> to |m>:
  ///   [[sin a, e^{-i t} cos a], [-e^{i t} cos a, sin a]].
  UnitaryOperator u;
  /// One step: [[cos g, e^{-i t} sin g], [-e^{i t} sin g, cos g]].
  UnitaryOperator v;
};

SearchOperators build_operators(const SearchProblem& p);

/// The Hermitian reflection [[sin a, e^{-i t} cos a], [e^{i t} cos a, -sin a]]
/// that also sends |s> to |m>. Its spectrum is {1, -1}, so its distance to
/// every rotation V^k is 1; kept for comparison with the rotation target.
UnitaryOperator hermitian_target(const SearchProblem& p);

/// V^k by repeated squaring.
UnitaryOperator operator_power(const UnitaryOperator& v, std::uint64_t k);

/// d(U, V^k), which equals |cos(alpha + k gamma)|.
double distance_after_k(const SearchProblem& p, std::uint64_t k);

/// |<m|V^k|s>|^2.
double transition_probability(const SearchProblem& p, std::uint64_t k);

struct MinimalK {
  std::uint64_t k = 0;
  double achieved = 1.0;
  /// ceil((pi/2) sqrt(N)) when N is known.
  std::optional<std::uint64_t> bound_sqrt_n;
};

/// No k in one period reaches the requested accuracy.
class Unreachable : public Error {
 public:
  Unreachable(std::uint64_t best_k, double best_value, double epsilon);
  std::uint64_t best_k() const { return best_k_; }
  double best_value() const { return best_value_; }

 private:
  std::uint64_t best_k_;
  double best_value_;
};

/// Smallest k >= 0 with distance_after_k(p, k) <= epsilon, looking only at
/// k <= ceil(pi / gamma). The closed-form candidate
/// ceil((acos(epsilon) - alpha) / gamma) is confirmed by evaluation.
/// Throws InvalidArgument for epsilon outside (0, 1), Unreachable.
MinimalK minimal_k(const SearchProblem& p, double epsilon);

}  // namespace unimetric
