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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace unimetric {

/// Angles closer than this (radians, circularly) are treated as one point.
inline constexpr double kAngleDedupTol = 1e-9;
/// Slack for deciding that an arc covers a half circle.
inline constexpr double kArcTol = 1e-9;

/// Smallest arc of the unit circle containing a set of points e^{i theta}.
struct SpectralArc {
  /// Distinct angles in [0, 2 pi), ascending.
  std::vector<double> angles;
  /// How many input angles collapsed onto each entry of `angles`.
  std::vector<std::size_t> multiplicities;
  /// Arc length, 2 pi minus the largest circular gap.
  double alpha = 0.0;
  bool covers_semicircle = false;
  /// Indices into `angles` of the arc's counterclockwise start and end.
  std::size_t first = 0;
  std::size_t last = 0;
};

/// Throws EmptyInput.
SpectralArc smallest_covering_arc(std::span<const double> angles);

/// sin(alpha/2) for alpha < pi and 1 otherwise.
double distance_from_arc(const SpectralArc& arc);

/// Convex weights over a subset of distinct angles.
struct WitnessWeights {
  std::vector<std::size_t> support;
  std::vector<double> weights;
};

struct PolygonDistance {
  double distance = 0.0;
  /// Indices refer to `angles`.
  WitnessWeights witness;
  /// Distinct angles in [0, 2 pi), ascending, same dedup rule as
  /// smallest_covering_arc.
  std::vector<double> angles;
};

/// Euclidean distance from the origin to the convex hull of the points
/// e^{i theta}. Computed with planar geometry (edge orientation tests,
/// barycentric coordinates, segment projection) and never consults the
/// covering arc, so it can serve as a cross-check of distance_from_arc.
///
/// When the origin is in the hull the witness is an antipodal pair if one
/// exists, otherwise a triangle containing the origin. Otherwise the witness
/// is the projection of the origin onto the nearest hull edge.
/// Throws EmptyInput.
PolygonDistance polygon_distance_to_origin(std::span<const double> angles);

/// | sum_k w_k e^{i theta_{support_k}} |.
double witness_modulus(const WitnessWeights& w, std::span<const double> angles);

/// `theta,re,im,multiplicity` rows, one per distinct angle.
std::string polygon_csv(const SpectralArc& arc);

}  // namespace unimetric
