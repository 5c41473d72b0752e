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
#include <numeric>
#include <random>

#include "support.hpp"
#include "unimetric/circlegeom.hpp"
#include "unimetric/errors.hpp"

namespace unimetric {
namespace {

using testing::uniform;

std::vector<double> random_angles(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> a(n);
  for (auto& t : a) t = uniform(rng, 0.0, kTwoPi);
  return a;
}

// Brute-force smallest arc: try every point as the counterclockwise start.
double brute_force_arc(const std::vector<double>& angles) {
  double best = kTwoPi;
  for (double start : angles) {
    double span = 0.0;
    for (double t : angles) span = std::max(span, wrap_angle(t - start));
    best = std::min(best, span);
  }
  return best;
}

void expect_valid_witness(const PolygonDistance& p) {
  const auto& w = p.witness;
  ASSERT_EQ(w.support.size(), w.weights.size());
  ASSERT_FALSE(w.support.empty());
  double total = 0.0;
  for (double x : w.weights) {
    EXPECT_GE(x, 0.0);
    total += x;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  for (auto s : w.support) EXPECT_LT(s, p.angles.size());
  EXPECT_NEAR(witness_modulus(w, p.angles), p.distance, 1e-10);
}

TEST(SmallestCoveringArc, Examples) {
  EXPECT_EQ(smallest_covering_arc(std::vector<double>{0.3}).alpha, 0.0);
  const auto quarter = smallest_covering_arc(std::vector<double>{0.0, kPi / 2});
  EXPECT_NEAR(quarter.alpha, kPi / 2, 1e-15);
  EXPECT_FALSE(quarter.covers_semicircle);
  const auto four =
      smallest_covering_arc(std::vector<double>{0, kPi / 2, kPi, 3 * kPi / 2});
  EXPECT_NEAR(four.alpha, 3 * kPi / 2, 1e-15);
  EXPECT_TRUE(four.covers_semicircle);
  EXPECT_THROW(smallest_covering_arc(std::vector<double>{}), EmptyInput);
}

TEST(SmallestCoveringArc, ArcAcrossZero) {
  const auto arc = smallest_covering_arc(std::vector<double>{0.1, kTwoPi - 0.2});
  EXPECT_NEAR(arc.alpha, 0.3, 1e-12);
  EXPECT_NEAR(arc.angles[arc.first], kTwoPi - 0.2, 1e-12);
  EXPECT_NEAR(arc.angles[arc.last], 0.1, 1e-12);
}

TEST(SmallestCoveringArc, Deduplication) {
  const auto arc = smallest_covering_arc(
      std::vector<double>{1.0, 1.0 + 1e-12, 2.0, 1e-12, kTwoPi - 1e-12});
  ASSERT_EQ(arc.angles.size(), 3u);
  const std::size_t total =
      std::accumulate(arc.multiplicities.begin(), arc.multiplicities.end(), std::size_t{0});
  EXPECT_EQ(total, 5u);
  EXPECT_NEAR(arc.alpha, 2.0, 1e-9);
}

TEST(SmallestCoveringArc, MatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_angles(rng, 1 + trial % 8);
    const auto arc = smallest_covering_arc(a);
    EXPECT_NEAR(arc.alpha, brute_force_arc(a), 1e-12);
    EXPECT_EQ(arc.covers_semicircle, arc.alpha >= kPi - kArcTol);
  }
}

TEST(DistanceFromArc, Examples) {
  SpectralArc arc;
  arc.alpha = 0.0;
  EXPECT_EQ(distance_from_arc(arc), 0.0);
  arc.alpha = kPi / 2;
  EXPECT_NEAR(distance_from_arc(arc), std::sqrt(2.0) / 2, 1e-15);
  arc.alpha = 3 * kPi / 2;
  arc.covers_semicircle = true;
  EXPECT_EQ(distance_from_arc(arc), 1.0);
}

TEST(PolygonDistance, ChordMidpoint) {
  for (double t : {0.1, 1.0, 2.5, 3.1}) {
    const auto p = polygon_distance_to_origin(std::vector<double>{0.0, t});
    EXPECT_NEAR(p.distance, std::cos(t / 2), 1e-12);
    expect_valid_witness(p);
    ASSERT_EQ(p.witness.weights.size(), 2u);
    EXPECT_NEAR(p.witness.weights[0], 0.5, 1e-12);
  }
}

TEST(PolygonDistance, OriginInside) {
  const auto antipodal = polygon_distance_to_origin(std::vector<double>{0.0, kPi});
  EXPECT_EQ(antipodal.distance, 0.0);
  expect_valid_witness(antipodal);
  EXPECT_NEAR(antipodal.witness.weights[0], 0.5, 1e-12);

  const auto triangle =
      polygon_distance_to_origin(std::vector<double>{0, 2 * kPi / 3, 4 * kPi / 3});
  EXPECT_EQ(triangle.distance, 0.0);
  expect_valid_witness(triangle);
  for (double w : triangle.witness.weights) EXPECT_NEAR(w, 1.0 / 3, 1e-12);
}

TEST(PolygonDistance, SinglePoint) {
  const auto p = polygon_distance_to_origin(std::vector<double>{2.0, 2.0});
  EXPECT_NEAR(p.distance, 1.0, 1e-15);
  expect_valid_witness(p);
  EXPECT_THROW(polygon_distance_to_origin(std::vector<double>{}), EmptyInput);
}

TEST(PolygonDistance, AgreesWithArcFormula) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_angles(rng, 1 + trial % 9);
    const auto p = polygon_distance_to_origin(a);
    const double d = distance_from_arc(smallest_covering_arc(a));
    EXPECT_NEAR(d, std::sqrt(std::max(0.0, 1.0 - p.distance * p.distance)), 1e-9);
    expect_valid_witness(p);
  }
}

TEST(PolygonDistance, RotationInvariance) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_angles(rng, 2 + trial % 6);
    const double shift = uniform(rng, -10, 10);
    auto b = a;
    for (auto& t : b) t = wrap_angle(t + shift);
    EXPECT_NEAR(smallest_covering_arc(a).alpha, smallest_covering_arc(b).alpha, 1e-10);
    EXPECT_NEAR(polygon_distance_to_origin(a).distance,
                polygon_distance_to_origin(b).distance, 1e-10);
  }
}

TEST(PolygonDistance, Monotonicity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_angles(rng, 1 + trial % 6);
    const double alpha = smallest_covering_arc(a).alpha;
    const double dist = polygon_distance_to_origin(a).distance;
    a.push_back(uniform(rng, 0, kTwoPi));
    EXPECT_GE(smallest_covering_arc(a).alpha, alpha - 1e-12);
    EXPECT_LE(polygon_distance_to_origin(a).distance, dist + 1e-12);
  }
}

TEST(PolygonCsv, Layout) {
  const auto arc = smallest_covering_arc(std::vector<double>{0.0, 0.0, kPi / 2});
  const std::string csv = polygon_csv(arc);
  EXPECT_EQ(csv.rfind("theta,re,im,multiplicity\n", 0), 0u);
  EXPECT_NE(csv.find(",2\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
}  // namespace unimetric
