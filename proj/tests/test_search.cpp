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
#include "unimetric/metrics.hpp"
#include "unimetric/search.hpp"

namespace unimetric {
namespace {

using namespace testing;

TEST(SearchProblem, Validation) {
  EXPECT_THROW(make_search_problem(kPi / 2, 0, 0.1), InvalidArgument);
  EXPECT_THROW(make_search_problem(0.0, 0, 0.1), InvalidArgument);
  EXPECT_THROW(make_search_problem(0.3, 0, 2.0), InvalidArgument);
  EXPECT_THROW(make_search_problem(0.3, kInfinity, 0.2), InvalidArgument);
  EXPECT_THROW(search_problem_from_n(1, 0), InvalidArgument);
  try {
    make_search_problem(-1, 0, 0.1);
  } catch (const InvalidArgument& e) {
    EXPECT_EQ(std::string(e.what()).rfind("InvalidAngles", 0), 0u);
  }
  const auto p = search_problem_from_n(1024, 0.3);
  EXPECT_NEAR(std::sin(p.alpha), 1.0 / 32, 1e-15);
  EXPECT_EQ(p.gamma, p.alpha);
  EXPECT_EQ(p.n, 1024u);
}

TEST(BuildOperators, Structure) {
  const auto p = make_search_problem(kPi / 6, 0.0, kPi / 6);
  const auto ops = build_operators(p);
  ComplexMatrix expected(2, 2);
  expected << 0.5, std::sqrt(3.0) / 2, -std::sqrt(3.0) / 2, 0.5;
  EXPECT_LE(max_abs(ops.u.matrix() - expected), 1e-15);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = make_search_problem(uniform(rng, 0.01, 1.5), uniform(rng, -5, 5),
                                       uniform(rng, 0.01, 1.5));
    const auto o = build_operators(q);
    EXPECT_LE(max_abs(o.v.matrix().adjoint() * o.v.matrix() - identity(2)), 1e-12);
    EXPECT_NEAR(o.v.matrix()(0, 0).real(), std::cos(q.gamma), 1e-15);
    // U maps the start state onto the marked state.
    const ComplexVector start = ket({std::sin(q.alpha), std::polar(std::cos(q.alpha), q.theta)});
    const ComplexVector image = o.u.matrix() * start;
    EXPECT_NEAR(std::abs(image(0)), 1.0, 1e-12);
  }
}

TEST(BuildOperators, HermitianReflectionIsAlwaysFar) {
  const auto p = make_search_problem(kPi / 6, 0.4, kPi / 6);
  const auto h = hermitian_target(p);
  EXPECT_LE(max_abs(h.matrix() - h.matrix().adjoint()), 1e-15);
  const auto ops = build_operators(p);
  for (std::uint64_t k = 0; k < 6; ++k) {
    EXPECT_NEAR(sup_distance(h, operator_power(ops.v, k)).value, 1.0, 1e-12);
  }
}

TEST(DistanceAfterK, Examples) {
  const auto p = make_search_problem(kPi / 6, 0.0, kPi / 6);
  EXPECT_NEAR(distance_after_k(p, 0), std::cos(kPi / 6), 1e-12);
  EXPECT_NEAR(distance_after_k(p, 1), 0.5, 1e-12);
  EXPECT_NEAR(distance_after_k(p, 2), 0.0, 1e-12);
  EXPECT_NEAR(distance_after_k(p, 3), 0.5, 1e-12);
}

TEST(DistanceAfterK, ClosedFormAndTransitionBound) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const double alpha = uniform(rng, 0.01, 1.5);
    const double gamma = uniform(rng, 0.01, 1.5);
    const auto p = make_search_problem(alpha, uniform(rng, 0, kTwoPi), gamma);
    const auto kmax = static_cast<std::uint64_t>((kPi / 2 - alpha) / gamma);
    const std::uint64_t k = kmax == 0 ? 0 : rng() % (kmax + 1);
    if (alpha + static_cast<double>(k) * gamma >= kPi / 2) continue;
    const double angle = alpha + static_cast<double>(k) * gamma;
    EXPECT_NEAR(distance_after_k(p, k), std::cos(angle), 1e-10);
    EXPECT_GE(transition_probability(p, k), std::pow(std::sin(angle), 2) - 1e-10);
  }
}

TEST(OperatorPower, MatchesRepeatedProduct) {
  std::mt19937_64 rng(63);
  const auto v = haar_random_unitary(3, rng);
  ComplexMatrix acc = identity(3);
  for (std::uint64_t k = 0; k < 20; ++k) {
    EXPECT_LE(max_abs(operator_power(v, k).matrix() - acc), 1e-12);
    acc = acc * v.matrix();
  }
}

TEST(MinimalK, Examples) {
  const auto p = make_search_problem(kPi / 6, 0.0, kPi / 6);
  const auto r = minimal_k(p, 0.01);
  EXPECT_EQ(r.k, 2u);
  EXPECT_NEAR(r.achieved, 0.0, 1e-12);
  EXPECT_EQ(minimal_k(p, std::cos(kPi / 6) + 1e-9).k, 0u);
  EXPECT_THROW(minimal_k(p, 0.0), InvalidArgument);
  EXPECT_THROW(minimal_k(p, 1.0), InvalidArgument);
}

TEST(MinimalK, Grover1024) {
  const auto r = minimal_k(search_problem_from_n(1024, 0.0), 0.1);
  // |cos(a + 46 a)| = 0.1017 > 0.1 >= |cos(a + 47 a)| = 0.0705.
  EXPECT_EQ(r.k, 47u);
  EXPECT_LE(r.achieved, 0.1);
  ASSERT_TRUE(r.bound_sqrt_n.has_value());
  EXPECT_EQ(*r.bound_sqrt_n, 51u);
  EXPECT_LE(r.k, *r.bound_sqrt_n);
}

TEST(MinimalK, SmallestAgainstLinearScan) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = make_search_problem(uniform(rng, 0.05, 1.5), uniform(rng, 0, 6),
                                       uniform(rng, 0.05, 1.5));
    const double eps = uniform(rng, 0.05, 0.9);
    std::optional<std::uint64_t> scan;
    for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(std::ceil(kPi / p.gamma)); ++k) {
      if (std::abs(std::cos(p.alpha + static_cast<double>(k) * p.gamma)) <= eps) {
        scan = k;
        break;
      }
    }
    if (scan) {
      EXPECT_EQ(minimal_k(p, eps).k, *scan);
    } else {
      EXPECT_THROW(minimal_k(p, eps), Unreachable);
    }
  }
}

TEST(MinimalK, Unreachable) {
  // gamma close to pi/2 skips over the target band around pi/2.
  const auto p = make_search_problem(0.1, 0.0, kPi / 2 - 1e-3);
  try {
    minimal_k(p, 0.01);
    FAIL();
  } catch (const Unreachable& e) {
    EXPECT_GT(e.best_value(), 0.01);
    EXPECT_NEAR(e.best_value(), distance_after_k(p, e.best_k()), 1e-12);
  }
}

TEST(MinimalK, SqrtNScaling) {
  for (int e = 6; e <= 20; e += 2) {
    const std::uint64_t n = std::uint64_t{1} << e;
    const auto r = minimal_k(search_problem_from_n(n, 0.0), 0.1);
    const double ratio = static_cast<double>(r.k) / std::sqrt(static_cast<double>(n));
    EXPECT_GE(ratio, 1.0) << n;
    EXPECT_LE(ratio, 1.7) << n;
  }
}

}  // namespace
}  // namespace unimetric
