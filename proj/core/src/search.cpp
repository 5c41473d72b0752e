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

#include "unimetric/search.hpp"

#include <cmath>
#include <string>

#include "unimetric/metrics.hpp"

namespace unimetric {

void validate(const SearchProblem& p) {
  if (!(p.alpha > 0.0 && p.alpha < kPi / 2)) {
    throw InvalidArgument("InvalidAngles: alpha must lie in (0, pi/2), got " +
                          std::to_string(p.alpha));
  }
  if (!(p.gamma > 0.0 && p.gamma < kPi / 2)) {
    throw InvalidArgument("InvalidAngles: gamma must lie in (0, pi/2), got " +
                          std::to_string(p.gamma));
  }
  if (!std::isfinite(p.theta)) {
    throw InvalidArgument("InvalidAngles: theta must be finite");
  }
  if (p.n) {
    const double expected = 1.0 / std::sqrt(static_cast<double>(*p.n));
    if (std::abs(std::sin(p.alpha) - expected) > 1e-12) {
      throw InvalidArgument("InvalidAngles: sin(alpha) does not match 1/sqrt(N)");
    }
  }
}

SearchProblem make_search_problem(double alpha, double theta, double gamma) {
  SearchProblem p{alpha, theta, gamma, std::nullopt};
  validate(p);
  return p;
}

SearchProblem search_problem_from_n(std::uint64_t n, double theta,
                                    std::optional<double> gamma) {
  if (n < 2) throw InvalidArgument("InvalidAngles: N must be at least 2");
  const double alpha = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
  SearchProblem p{alpha, theta, gamma.value_or(alpha), n};
  validate(p);
  return p;
}

namespace {

ComplexMatrix plane_rotation(double angle, double theta) {
  ComplexMatrix r(2, 2);
  const Complex phase = std::polar(1.0, theta);
  r << std::cos(angle), std::conj(phase) * std::sin(angle),
      -phase * std::sin(angle), std::cos(angle);
  return r;
}

}  // namespace

SearchOperators build_operators(const SearchProblem& p) {
  validate(p);
  // Rotating |s> onto |m> is a rotation by pi/2 - alpha in the same
  // one-parameter family as V, so U^dag V^k has eigenvalues
  // exp(+-i (pi/2 - alpha - k gamma)).
  return {validate_unitary(plane_rotation(kPi / 2 - p.alpha, p.theta)),
          validate_unitary(plane_rotation(p.gamma, p.theta))};
}

UnitaryOperator hermitian_target(const SearchProblem& p) {
  validate(p);
  const Complex phase = std::polar(1.0, p.theta);
  const double s = std::sin(p.alpha), c = std::cos(p.alpha);
  ComplexMatrix u(2, 2);
  u << s, std::conj(phase) * c, phase * c, -s;
  return validate_unitary(u);
}

UnitaryOperator operator_power(const UnitaryOperator& v, std::uint64_t k) {
  const Index n = v.dim();
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix base = v.matrix();
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return validate_unitary(result);
}

double distance_after_k(const SearchProblem& p, std::uint64_t k) {
  const SearchOperators ops = build_operators(p);
  return sup_distance(ops.u, operator_power(ops.v, k)).value;
}

double transition_probability(const SearchProblem& p, std::uint64_t k) {
  const SearchOperators ops = build_operators(p);
  ComplexVector start(2);
  start << std::sin(p.alpha), std::polar(std::cos(p.alpha), p.theta);
  const ComplexVector evolved = operator_power(ops.v, k).matrix() * start;
  return std::norm(evolved(0));
}

Unreachable::Unreachable(std::uint64_t best_k, double best_value,
                         double epsilon)
    : Error("no k within one period reaches epsilon = " +
            std::to_string(epsilon) + "; best k = " + std::to_string(best_k) +
            " with distance " + std::to_string(best_value)),
      best_k_(best_k),
      best_value_(best_value) {}

MinimalK minimal_k(const SearchProblem& p, double epsilon) {
  validate(p);
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("epsilon must lie in (0, 1)");
  }
  const SearchOperators ops = build_operators(p);
  auto distance = [&](std::uint64_t k) {
    return sup_distance(ops.u, operator_power(ops.v, k)).value;
  };

  MinimalK out;
  if (p.n) {
    out.bound_sqrt_n = static_cast<std::uint64_t>(
        std::ceil(0.5 * kPi * std::sqrt(static_cast<double>(*p.n))));
  }
  const auto period = static_cast<std::uint64_t>(std::ceil(kPi / p.gamma));

  std::optional<std::uint64_t> found;
  const double reach = std::acos(epsilon) - p.alpha;
  const std::uint64_t guess =
      reach <= 0 ? 0 : static_cast<std::uint64_t>(std::ceil(reach / p.gamma));
  if (guess <= period && distance(guess) <= epsilon &&
      (guess == 0 || distance(guess - 1) > epsilon)) {
    found = guess;
  } else {
    for (std::uint64_t k = 0; k <= period; ++k) {
      if (distance(k) <= epsilon) {
        found = k;
        break;
      }
    }
  }

  if (!found) {
    std::uint64_t best_k = 0;
    double best = kInfinity;
    for (std::uint64_t k = 0; k <= period; ++k) {
      const double d = distance(k);
      if (d < best) {
        best = d;
        best_k = k;
      }
    }
    throw Unreachable(best_k, best, epsilon);
  }
  out.k = *found;
  out.achieved = distance(out.k);
  if (out.bound_sqrt_n && p.gamma == p.alpha && out.k > *out.bound_sqrt_n) {
    throw Error("minimal k " + std::to_string(out.k) +
                " exceeds the O(sqrt N) bound " +
                std::to_string(*out.bound_sqrt_n));
  }
  return out;
}

}  // namespace unimetric
