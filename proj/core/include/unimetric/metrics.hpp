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

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "unimetric/circlegeom.hpp"
#include "unimetric/linalg.hpp"

namespace unimetric {

/// Noise floor reported with every metric value.
inline constexpr double kMetricTolerance = 1e-9;
/// Normalization slack accepted for state vectors.
inline constexpr double kNormTol = 1e-10;

enum class MetricMethod { ClosedForm, Optimization, Oracle };

std::string to_string(MetricMethod m);

struct MetricResult {
  /// In [0, 1].
  double value = 0.0;
  /// Unit vector attaining (or approximating) the supremum, when known.
  std::optional<ComplexVector> maximizer;
  MetricMethod method = MetricMethod::ClosedForm;
  double tolerance = kMetricTolerance;
};

/// {"value", "method", "maximizer" (matrix JSON or null), "tolerance"}.
nlohmann::json to_json(const MetricResult& r);

/// sqrt(1 - |<psi|U^dag V|psi>|^2). Throws DimensionMismatch, NotNormalized.
double d_psi(const UnitaryOperator& u, const UnitaryOperator& v,
             const ComplexVector& psi);

/// Trace distance between U rho U^dag and V rho V^dag.
double d_rho(const UnitaryOperator& u, const UnitaryOperator& v,
             const DensityState& rho);

/// Spectrum of U^dag V and its smallest covering arc.
struct RelativeSpectrum {
  UnitaryOperator relative;
  SpectralArc arc;
};

RelativeSpectrum relative_spectrum(const UnitaryOperator& u,
                                   const UnitaryOperator& v);

/// sup over states of d_rho(U, V), read off the eigenvalue arc of U^dag V.
///
/// For arcs shorter than a half circle the maximizer is the equal
/// superposition of the eigenvectors at the two ends of the arc, which lands
/// <psi|U^dag V|psi> on the midpoint of the chord. When the arc covers a half
/// circle the maximizer combines eigenvectors with the square roots of convex
/// weights whose eigenvalue average is 0, so U psi and V psi are orthogonal.
MetricResult sup_distance(const UnitaryOperator& u, const UnitaryOperator& v);
MetricResult sup_distance(const RelativeSpectrum& spectrum);

/// Values within this of 1 count as perfectly distinguishable.
inline constexpr double kDistinguishTol = 1e-9;

/// One-shot distinguishability of U and V: possible exactly when d(U, V) = 1,
/// i.e. when some state a has U a orthogonal to V a.
struct Distinguishability {
  bool distinguishable = false;
  MetricResult metric;
  /// Length of the smallest arc containing the spectrum of U^dag V.
  double arc = 0.0;
  /// |<U a, V a>| for the witness a (distinguishable case).
  std::optional<double> residual;
  /// min over states of |<psi|U^dag V|psi>| = cos(arc / 2) (otherwise).
  std::optional<double> overlap_bound;
};

Distinguishability distinguish(const UnitaryOperator& u,
                               const UnitaryOperator& v);

/// 2^{1/p} * sup_distance. With p = 1 this is the unnormalized trace-norm
/// distance between pure output states, twice the half-normalized trace
/// distance used everywhere else. Throws InvalidP.
double schatten_sup_distance(const UnitaryOperator& u,
                             const UnitaryOperator& v, double p);

/// Distance between U (x) W and V (x) X given d(U, V) and d(W, X):
/// d1 sqrt(1 - d2^2) + d2 sqrt(1 - d1^2) while d1^2 + d2^2 < 1, else 1.
/// Throws OutOfRange.
double tensor_distance(double d1, double d2);

struct SandwichCheck {
  /// (1/2) |(U - e^{ix} V) psi|^2 with x = -arg <psi|U^dag V|psi>.
  double lower = 0.0;
  /// d_psi(U, V)^2.
  double mid = 0.0;
  /// |(U - V) psi|^2.
  double upper = 0.0;
  bool holds = false;
};

SandwichCheck check_sandwich(const UnitaryOperator& u,
                             const UnitaryOperator& v,
                             const ComplexVector& psi);

}  // namespace unimetric
