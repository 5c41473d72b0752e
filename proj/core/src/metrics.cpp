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

#include "unimetric/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "unimetric/errors.hpp"
#include "unimetric/matrix_io.hpp"

namespace unimetric {

std::string to_string(MetricMethod m) {
  switch (m) {
    case MetricMethod::ClosedForm:
      return "closed_form";
    case MetricMethod::Optimization:
      return "optimization";
    case MetricMethod::Oracle:
      return "oracle";
  }
  return "unknown";
}

nlohmann::json to_json(const MetricResult& r) {
  nlohmann::json j;
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  j["maximizer"] = r.maximizer ? matrix_to_json(*r.maximizer) : nlohmann::json(nullptr);
  j["tolerance"] = r.tolerance;
  return j;
}

namespace {

void require_pair(const UnitaryOperator& u, const UnitaryOperator& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
}

void require_state(const UnitaryOperator& u, const ComplexVector& psi) {
  if (psi.size() != u.dim()) throw DimensionMismatch(u.dim(), psi.size());
  const double norm = psi.norm();
  if (!(std::abs(norm - 1.0) <= kNormTol)) throw NotNormalized(norm);
}

double circular_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kTwoPi - d);
}

// Column of the relative eigenbasis whose angle matches `theta`.
Index column_for_angle(const UnitaryOperator& w, double theta) {
  const auto& angles = w.eigen_angles();
  Index best = 0;
  double gap = kInfinity;
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const double d = circular_distance(angles[k], theta);
    if (d < gap) {
      gap = d;
      best = static_cast<Index>(k);
    }
  }
  return best;
}

}  // namespace

double d_psi(const UnitaryOperator& u, const UnitaryOperator& v,
             const ComplexVector& psi) {
  require_pair(u, v);
  require_state(u, psi);
  const Complex overlap = (u.matrix() * psi).dot(v.matrix() * psi);
  return std::sqrt(std::clamp(1.0 - std::norm(overlap), 0.0, 1.0));
}

double d_rho(const UnitaryOperator& u, const UnitaryOperator& v,
             const DensityState& rho) {
  require_pair(u, v);
  if (rho.dim() != u.dim()) throw DimensionMismatch(u.dim(), rho.dim());
  return trace_distance(rho.conjugated(u), rho.conjugated(v));
}

RelativeSpectrum relative_spectrum(const UnitaryOperator& u,
                                   const UnitaryOperator& v) {
  require_pair(u, v);
  UnitaryOperator w = validate_unitary(u.matrix().adjoint() * v.matrix());
  SpectralArc arc = smallest_covering_arc(w.eigen_angles());
  return {std::move(w), std::move(arc)};
}

MetricResult sup_distance(const RelativeSpectrum& spectrum) {
  const UnitaryOperator& w = spectrum.relative;
  const SpectralArc& arc = spectrum.arc;
  const ComplexMatrix& vecs = w.eigen_vectors();

  MetricResult out;
  out.method = MetricMethod::ClosedForm;
  out.value = distance_from_arc(arc);

  if (arc.covers_semicircle) {
    const PolygonDistance hull = polygon_distance_to_origin(w.eigen_angles());
    if (hull.distance == 0.0) {
      ComplexVector psi = ComplexVector::Zero(w.dim());
      for (std::size_t k = 0; k < hull.witness.support.size(); ++k) {
        const double theta = hull.angles[hull.witness.support[k]];
        psi += std::sqrt(hull.witness.weights[k]) *
               vecs.col(column_for_angle(w, theta));
      }
      out.maximizer = psi / psi.norm();
      return out;
    }
  }

  const Index first = column_for_angle(w, arc.angles[arc.first]);
  const Index last = column_for_angle(w, arc.angles[arc.last]);
  if (first == last) {
    out.maximizer = vecs.col(first);
  } else {
    out.maximizer = (vecs.col(first) + vecs.col(last)) / std::sqrt(2.0);
  }
  return out;
}

MetricResult sup_distance(const UnitaryOperator& u, const UnitaryOperator& v) {
  // d is symmetric and a maximizer for (V, U) also serves (U, V); evaluating
  // in a fixed order keeps the value bitwise symmetric.
  if (entrywise_less(v.matrix(), u.matrix())) {
    return sup_distance(relative_spectrum(v, u));
  }
  return sup_distance(relative_spectrum(u, v));
}

Distinguishability distinguish(const UnitaryOperator& u,
                               const UnitaryOperator& v) {
  const RelativeSpectrum spectrum = relative_spectrum(u, v);
  Distinguishability out;
  out.metric = sup_distance(spectrum);
  out.arc = spectrum.arc.alpha;
  out.distinguishable = out.metric.value >= 1.0 - kDistinguishTol;
  if (out.distinguishable) {
    const ComplexVector& a = *out.metric.maximizer;
    out.residual = std::abs((u.matrix() * a).dot(v.matrix() * a));
  } else {
    out.overlap_bound = std::cos(out.arc / 2);
  }
  return out;
}

double schatten_sup_distance(const UnitaryOperator& u,
                             const UnitaryOperator& v, double p) {
  if (std::isnan(p) || p < 1.0) throw InvalidP(p);
  const double d = sup_distance(u, v).value;
  if (std::isinf(p)) return d;
  return std::pow(2.0, 1.0 / p) * d;
}

double tensor_distance(double d1, double d2) {
  if (!(d1 >= 0.0 && d1 <= 1.0) || !(d2 >= 0.0 && d2 <= 1.0)) {
    throw OutOfRange("tensor_distance arguments must lie in [0, 1], got " +
                     std::to_string(d1) + ", " + std::to_string(d2));
  }
  if (d1 * d1 + d2 * d2 >= 1.0) return 1.0;
  const double value =
      d1 * std::sqrt(1.0 - d2 * d2) + d2 * std::sqrt(1.0 - d1 * d1);
  return std::clamp(value, 0.0, 1.0);
}

SandwichCheck check_sandwich(const UnitaryOperator& u,
                             const UnitaryOperator& v,
                             const ComplexVector& psi) {
  require_pair(u, v);
  require_state(u, psi);
  const ComplexVector up = u.matrix() * psi;
  const ComplexVector vp = v.matrix() * psi;
  const Complex overlap = up.dot(vp);
  const double x = std::abs(overlap) > 0 ? -std::arg(overlap) : 0.0;

  SandwichCheck out;
  out.lower = 0.5 * (up - std::polar(1.0, x) * vp).squaredNorm();
  out.mid = std::clamp(1.0 - std::norm(overlap), 0.0, 1.0);
  out.upper = (up - vp).squaredNorm();
  constexpr double kSlack = 1e-10;
  out.holds = out.lower <= out.mid + kSlack && out.mid <= out.upper + kSlack;
  return out;
}

}  // namespace unimetric
