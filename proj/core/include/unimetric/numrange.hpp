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

#include "unimetric/linalg.hpp"

namespace unimetric {

struct NumericalRangeQuery {
  ComplexMatrix matrix;
  /// Coarse directions in the support-function sweep; at least 8.
  std::size_t phi_samples = 720;
  /// Golden-section steps around the best coarse direction.
  std::size_t refine_iters = 40;
};

struct NumericalRangeResult {
  /// Distance from 0 to the numerical range {<psi|M|psi> : |psi| = 1}.
  double distance = 0.0;
  /// Unit vector with |<w|M|w>| close to `distance`.
  ComplexVector witness;
  /// Direction at which the supporting line is farthest from the origin.
  double phi = 0.0;
};

/// Distance from the origin to the numerical range of a square matrix.
///
/// The numerical range is convex, so the distance equals
///   max_phi max(0, lambda_min(Herm(e^{i phi} M))).
/// The maximum is located by a uniform sweep over phi and refined by golden
/// section. When the origin lies in the range the witness is assembled from
/// sweep eigenvectors by two steering steps so that |<w|M|w>| <= ~1e-8.
///
/// Throws NotSquare, or InvalidArgument when the query is malformed.
NumericalRangeResult numrange_origin_distance(const NumericalRangeQuery& q);

/// Moves between two unit vectors inside their span so that <psi|M|psi>
/// travels along the straight line through <a|M|a> and <b|M|b>, stopping at
/// `target`, which must lie on that segment. Returns a unit vector.
ComplexVector steer_to_point(const ComplexMatrix& m, const ComplexVector& a,
                             const ComplexVector& b, Complex target);

}  // namespace unimetric
