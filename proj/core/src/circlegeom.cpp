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

#include "unimetric/circlegeom.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <iomanip>

#include "unimetric/errors.hpp"
#include "unimetric/linalg.hpp"

namespace unimetric {

namespace {

struct Distinct {
  std::vector<double> angles;
  std::vector<std::size_t> multiplicities;
};

Distinct deduplicate(std::span<const double> input) {
  if (input.empty()) throw EmptyInput("angle set is empty");
  std::vector<double> sorted;
  sorted.reserve(input.size());
  for (double t : input) {
    if (!std::isfinite(t)) throw InvalidArgument("angle is not finite");
    sorted.push_back(wrap_angle(t));
  }
  std::sort(sorted.begin(), sorted.end());

  Distinct out;
  for (double t : sorted) {
    if (!out.angles.empty() && t - out.angles.back() <= kAngleDedupTol) {
      ++out.multiplicities.back();
    } else {
      out.angles.push_back(t);
      out.multiplicities.push_back(1);
    }
  }
  // Points just below 2 pi coincide with points just above 0.
  if (out.angles.size() > 1 &&
      out.angles.front() + kTwoPi - out.angles.back() <= kAngleDedupTol) {
    out.multiplicities.front() += out.multiplicities.back();
    out.angles.pop_back();
    out.multiplicities.pop_back();
  }
  return out;
}

Complex unit(double theta) { return std::polar(1.0, theta); }

// Cross product of (b - a) and (p - a); positive when p is left of a->b.
double cross(Complex a, Complex b, Complex p) {
  const Complex e = b - a;
  const Complex q = p - a;
  return e.real() * q.imag() - e.imag() * q.real();
}

struct SegmentProjection {
  double distance;
  double t;  // point = (1 - t) a + t b
};

SegmentProjection project_origin(Complex a, Complex b) {
  const Complex e = b - a;
  const double len2 = std::norm(e);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(-(std::conj(e) * a).real() / len2, 0.0, 1.0);
  return {std::abs((1.0 - t) * a + t * b), t};
}

}  // namespace

SpectralArc smallest_covering_arc(std::span<const double> angles) {
  Distinct d = deduplicate(angles);
  SpectralArc arc;
  const std::size_t m = d.angles.size();
  arc.angles = std::move(d.angles);
  arc.multiplicities = std::move(d.multiplicities);
  if (m == 1) {
    arc.alpha = 0.0;
    arc.covers_semicircle = false;
    return arc;
  }
  // Gap k runs counterclockwise from angles[k] to angles[(k+1) % m].
  double max_gap = -1.0;
  std::size_t max_at = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double gap = k + 1 < m ? arc.angles[k + 1] - arc.angles[k]
                                 : arc.angles[0] + kTwoPi - arc.angles[k];
    if (gap > max_gap) {
      max_gap = gap;
      max_at = k;
    }
  }
  arc.alpha = std::clamp(kTwoPi - max_gap, 0.0, kTwoPi);
  arc.first = (max_at + 1) % m;
  arc.last = max_at;
  arc.covers_semicircle = arc.alpha >= kPi - kArcTol;
  return arc;
}

double distance_from_arc(const SpectralArc& arc) {
  if (arc.alpha >= kPi) return 1.0;
  return std::clamp(std::sin(0.5 * arc.alpha), 0.0, 1.0);
}

PolygonDistance polygon_distance_to_origin(std::span<const double> angles) {
  Distinct d = deduplicate(angles);
  PolygonDistance out;
  out.angles = std::move(d.angles);
  const std::vector<double>& th = out.angles;
  const std::size_t m = th.size();

  if (m == 1) {
    out.distance = 1.0;
    out.witness = {{0}, {1.0}};
    return out;
  }

  std::vector<Complex> z(m);
  for (std::size_t k = 0; k < m; ++k) z[k] = unit(th[k]);

  // Distinct points on a circle are in convex position; in angular order
  // they trace the hull counterclockwise.
  bool inside = true;
  if (m == 2) {
    // A two-point hull is a chord; the origin is on it only for antipodes.
    inside = project_origin(z[0], z[1]).distance <= kArcTol;
  } else {
    for (std::size_t k = 0; k < m && inside; ++k) {
      if (cross(z[k], z[(k + 1) % m], Complex(0.0)) < -kArcTol) inside = false;
    }
  }

  if (inside) {
    out.distance = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = k + 1; j < m; ++j) {
        if (std::abs(th[j] - th[k] - kPi) <= kArcTol) {
          out.witness = {{k, j}, {0.5, 0.5}};
          return out;
        }
      }
    }
    // Fan triangulation from vertex 0.
    for (std::size_t k = 1; k + 1 < m; ++k) {
      const Complex a = z[0], b = z[k], c = z[k + 1];
      const double area = cross(a, b, c);
      if (area <= 0.0) continue;
      const double wa = cross(b, c, Complex(0.0)) / area;
      const double wb = cross(c, a, Complex(0.0)) / area;
      const double wc = cross(a, b, Complex(0.0)) / area;
      if (wa >= -kArcTol && wb >= -kArcTol && wc >= -kArcTol) {
        std::vector<double> w = {std::max(wa, 0.0), std::max(wb, 0.0),
                                 std::max(wc, 0.0)};
        const double s = w[0] + w[1] + w[2];
        for (double& x : w) x /= s;
        out.witness = {{0, k, k + 1}, std::move(w)};
        return out;
      }
    }
    // Origin within tolerance of the boundary but missed by every fan
    // triangle: fall through to the nearest edge.
  }

  double best = kInfinity;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t next = (k + 1) % m;
    if (next == k) continue;
    const SegmentProjection p = project_origin(z[k], z[next]);
    if (p.distance < best) {
      best = p.distance;
      if (k < next) {
        out.witness = {{k, next}, {1.0 - p.t, p.t}};
      } else {
        out.witness = {{next, k}, {p.t, 1.0 - p.t}};
      }
    }
  }
  out.distance = inside ? 0.0 : best;
  return out;
}

double witness_modulus(const WitnessWeights& w, std::span<const double> angles) {
  Complex acc(0.0);
  for (std::size_t k = 0; k < w.support.size(); ++k) {
    acc += w.weights[k] * unit(angles[w.support[k]]);
  }
  return std::abs(acc);
}

std::string polygon_csv(const SpectralArc& arc) {
  std::ostringstream out;
  out << "theta,re,im,multiplicity\n" << std::setprecision(17);
  for (std::size_t k = 0; k < arc.angles.size(); ++k) {
    const double t = arc.angles[k];
    out << t << ',' << std::cos(t) << ',' << std::sin(t) << ','
        << arc.multiplicities[k] << '\n';
  }
  return out.str();
}

}  // namespace unimetric
