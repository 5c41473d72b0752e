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

#include "unimetric/numrange.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "unimetric/errors.hpp"

namespace unimetric {

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
Vec3 axpy(double s, const Vec3& x, const Vec3& y) {
  return {s * x[0] + y[0], s * x[1] + y[1], s * x[2] + y[2]};
}
Vec3 scale(double s, const Vec3& x) { return {s * x[0], s * x[1], s * x[2]}; }

// 2x2 Hermitian K = k0 I + k . sigma.
struct PauliCoords {
  double k0;
  Vec3 k;
};

PauliCoords pauli_coords(const Eigen::Matrix2cd& h) {
  return {0.5 * (h(0, 0).real() + h(1, 1).real()),
          {h(1, 0).real(), h(1, 0).imag(),
           0.5 * (h(0, 0).real() - h(1, 1).real())}};
}

Vec3 bloch_vector(Complex c0, Complex c1) {
  const Complex cross = std::conj(c0) * c1;
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          std::norm(c0) - std::norm(c1)};
}

Eigen::Vector2cd state_from_bloch(const Vec3& r) {
  const double len = std::sqrt(dot(r, r));
  const double z = len > 0 ? std::clamp(r[2] / len, -1.0, 1.0) : 1.0;
  const double theta = std::acos(z);
  const double phi = std::atan2(r[1], r[0]);
  return {Complex(std::cos(0.5 * theta)),
          std::polar(std::sin(0.5 * theta), phi)};
}

Complex quadratic_form(const ComplexMatrix& m, const ComplexVector& v) {
  return v.dot(m * v);
}

// Lowest eigenpair of cos(phi) H1 - sin(phi) H2, the Hermitian part of
// e^{i phi} M.
class SupportFunction {
 public:
  explicit SupportFunction(const ComplexMatrix& m)
      : h1_((m + m.adjoint()) * 0.5),
        h2_((m - m.adjoint()) * Complex(0.0, -0.5)) {}

  double value(double phi) const {
    const ComplexMatrix h = std::cos(phi) * h1_ - std::sin(phi) * h2_;
    if (h.rows() == 1) return h(0, 0).real();
    if (h.rows() == 2) {
      const double a = h(0, 0).real(), c = h(1, 1).real();
      return 0.5 * (a + c) - std::hypot(0.5 * (a - c), std::abs(h(1, 0)));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  }

  ComplexVector vector(double phi) const {
    const ComplexMatrix h = std::cos(phi) * h1_ - std::sin(phi) * h2_;
    if (h.rows() == 1) return ComplexVector::Ones(1);
    if (h.rows() == 2) {
      const double a = h(0, 0).real(), c = h(1, 1).real();
      const Complex b = h(0, 1);
      const double lambda =
          0.5 * (a + c) - std::hypot(0.5 * (a - c), std::abs(b));
      // Rows of (H - lambda) are (a - lambda, b) and (conj b, c - lambda);
      // use whichever yields the longer null vector.
      ComplexVector v1(2), v2(2);
      v1 << b, Complex(lambda - a);
      v2 << Complex(lambda - c), std::conj(b);
      ComplexVector& v = v1.norm() >= v2.norm() ? v1 : v2;
      const double n = v.norm();
      if (n == 0.0) {
        ComplexVector e = ComplexVector::Zero(2);
        e(a <= c ? 0 : 1) = 1.0;
        return e;
      }
      return v / n;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    return es.eigenvectors().col(0);
  }

 private:
  ComplexMatrix h1_;
  ComplexMatrix h2_;
};

struct Candidate {
  ComplexVector vec;
  Complex value;
};

NumericalRangeResult zero_in_range(const ComplexMatrix& m,
                                   const SupportFunction& support,
                                   std::size_t samples, double phi_best) {
  NumericalRangeResult out;
  out.distance = 0.0;
  out.phi = phi_best;

  std::vector<Candidate> pts;
  pts.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const double phi = kTwoPi * static_cast<double>(j) /
                       static_cast<double>(samples);
    ComplexVector v = support.vector(phi);
    const Complex z = quadratic_form(m, v);
    pts.push_back({std::move(v), z});
  }

  auto smallest = std::min_element(
      pts.begin(), pts.end(), [](const Candidate& x, const Candidate& y) {
        return std::abs(x.value) < std::abs(y.value);
      });
  out.witness = smallest->vec;
  if (std::abs(smallest->value) <= 1e-12) return out;

  auto largest = std::max_element(
      pts.begin(), pts.end(), [](const Candidate& x, const Candidate& y) {
        return std::abs(x.value) < std::abs(y.value);
      });
  const Candidate& anchor = *largest;
  const Complex dir = -anchor.value / std::abs(anchor.value);

  // Boundary points on either side of the ray from 0 in direction `dir`.
  std::optional<std::size_t> above, below;
  double above_angle = kInfinity, below_angle = -kInfinity;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (std::abs(pts[k].value) == 0.0) continue;
    const double rel = std::arg(pts[k].value * std::conj(dir));
    if (rel >= 0 && rel < above_angle) {
      above_angle = rel;
      above = k;
    }
    if (rel < 0 && rel > below_angle) {
      below_angle = rel;
      below = k;
    }
  }

  Candidate far_side;
  constexpr double kOnRay = 1e-9;
  if (above && above_angle <= kOnRay) {
    far_side = pts[*above];
  } else if (below && -below_angle <= kOnRay) {
    far_side = pts[*below];
  } else if (above && below && above_angle - below_angle < kPi) {
    const Complex zq = pts[*below].value, zp = pts[*above].value;
    const double denom = ((zp - zq) * std::conj(dir)).imag();
    if (denom == 0.0) return out;
    const double t = std::clamp(-(zq * std::conj(dir)).imag() / denom, 0.0, 1.0);
    const Complex target = zq + t * (zp - zq);
    ComplexVector v = steer_to_point(m, pts[*below].vec, pts[*above].vec, target);
    far_side = {v, quadratic_form(m, v)};
  } else {
    return out;
  }
  if ((far_side.value * std::conj(dir)).real() <= 0.0) return out;

  ComplexVector v = steer_to_point(m, anchor.vec, far_side.vec, Complex(0.0));
  if (std::abs(quadratic_form(m, v)) < std::abs(smallest->value)) {
    out.witness = std::move(v);
  }
  return out;
}

}  // namespace

ComplexVector steer_to_point(const ComplexMatrix& m, const ComplexVector& a,
                             const ComplexVector& b, Complex target) {
  const Complex za = quadratic_form(m, a);
  const Complex zb = quadratic_form(m, b);
  const double length = std::abs(zb - za);
  if (length < 1e-15) return a;

  const Complex along = std::conj(zb - za) / length;
  const double x_target =
      std::clamp((along * (target - za)).real(), 0.0, length);
  if (x_target <= 0.0) return a;
  if (x_target >= length) return b;

  ComplexMatrix basis(a.size(), 2);
  basis.col(0) = a / a.norm();
  ComplexVector rest = b - basis.col(0) * basis.col(0).dot(b);
  const double rest_norm = rest.norm();
  if (rest_norm < 1e-14) return a;
  basis.col(1) = rest / rest_norm;

  const Eigen::Matrix2cd m2 = basis.adjoint() * m * basis;
  const Eigen::Matrix2cd shifted =
      along * (m2 - za * Eigen::Matrix2cd::Identity());
  const Eigen::Matrix2cd re = (shifted + shifted.adjoint()) * 0.5;
  const Eigen::Matrix2cd im = (shifted - shifted.adjoint()) * Complex(0.0, -0.5);
  const PauliCoords h = pauli_coords(re);
  const PauliCoords k = pauli_coords(im);

  const Vec3 ra = {0.0, 0.0, 1.0};
  const Vec3 rb = bloch_vector(basis.col(0).dot(b), basis.col(1).dot(b));

  // States with <psi|M|psi> on the line form the circle k . r = -k0 on the
  // Bloch sphere; walk along it from ra to rb.
  const double k_len = std::sqrt(dot(k.k, k.k));
  double span = 0.0;
  Vec3 center{0, 0, 0}, n{0, 0, 1}, pa{0, 0, 0};
  if (k_len < 1e-14) {
    n = cross3(ra, rb);
    const double s = std::sqrt(dot(n, n));
    if (s < 1e-14) {
      n = {1.0, 0.0, 0.0};
    } else {
      n = scale(1.0 / s, n);
    }
    pa = ra;
    span = std::atan2(dot(n, cross3(ra, rb)), dot(ra, rb));
  } else {
    n = scale(1.0 / k_len, k.k);
    center = scale(-k.k0 / k_len, n);
    pa = axpy(-1.0, center, ra);
    pa = axpy(-dot(pa, n), n, pa);
    Vec3 pb = axpy(-1.0, center, rb);
    pb = axpy(-dot(pb, n), n, pb);
    span = std::atan2(dot(n, cross3(pa, pb)), dot(pa, pb));
  }
  const Vec3 npa = cross3(n, pa);
  auto point = [&](double s) {
    const double beta = s * span;
    Vec3 r = axpy(std::cos(beta), pa, center);
    return axpy(std::sin(beta), npa, r);
  };
  auto position = [&](double s) { return h.k0 + dot(h.k, point(s)); };

  double lo = 0.0, hi = 1.0;
  const bool rising = position(1.0) >= position(0.0);
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool below_target = position(mid) < x_target;
    if (below_target == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Eigen::Vector2cd coords = state_from_bloch(point(0.5 * (lo + hi)));
  ComplexVector psi = basis * coords;
  return psi / psi.norm();
}

NumericalRangeResult numrange_origin_distance(const NumericalRangeQuery& q) {
  const ComplexMatrix& m = q.matrix;
  if (m.rows() != m.cols()) throw NotSquare(m.rows(), m.cols());
  if (m.rows() == 0) throw InvalidArgument("numerical range of empty matrix");
  if (q.phi_samples < 8) throw InvalidArgument("phi_samples must be >= 8");
  require_finite(m);

  if (m.rows() == 1) {
    NumericalRangeResult out;
    out.distance = std::abs(m(0, 0));
    out.witness = ComplexVector::Ones(1);
    out.phi = wrap_angle(-std::arg(m(0, 0)));
    return out;
  }

  const SupportFunction support(m);
  const std::size_t samples = q.phi_samples;
  const double step = kTwoPi / static_cast<double>(samples);

  double best_phi = 0.0;
  double best = -kInfinity;
  for (std::size_t j = 0; j < samples; ++j) {
    const double phi = step * static_cast<double>(j);
    const double f = support.value(phi);
    if (f > best) {
      best = f;
      best_phi = phi;
    }
  }

  // Where positive, the support function is unimodal in phi.
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = best_phi - step, hi = best_phi + step;
  double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
  double f1 = support.value(x1), f2 = support.value(x2);
  for (std::size_t it = 0; it < q.refine_iters; ++it) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = support.value(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = support.value(x2);
    }
  }
  if (f1 > best) {
    best = f1;
    best_phi = x1;
  }
  if (f2 > best) {
    best = f2;
    best_phi = x2;
  }

  if (best <= 0.0) return zero_in_range(m, support, samples, wrap_angle(best_phi));

  NumericalRangeResult out;
  out.distance = best;
  out.phi = wrap_angle(best_phi);

  // At a corner of the range the lowest eigenvector is ambiguous; the
  // nearest point sits between the eigenvectors just either side of it.
  constexpr double kSide = 1e-6;
  std::vector<Candidate> cands;
  for (double phi : {best_phi, best_phi - kSide, best_phi + kSide}) {
    ComplexVector v = support.vector(phi);
    const Complex z = quadratic_form(m, v);
    cands.push_back({std::move(v), z});
  }
  double best_seg = kInfinity;
  Complex target;
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      const Complex a = cands[i].value, e = cands[j].value - a;
      const double len2 = std::norm(e);
      const double t =
          len2 > 0 ? std::clamp(-(std::conj(e) * a).real() / len2, 0.0, 1.0)
                   : 0.0;
      const Complex p = a + t * e;
      if (std::abs(p) < best_seg) {
        best_seg = std::abs(p);
        target = p;
        ia = i;
        ib = j;
      }
    }
  }
  ComplexVector steered = steer_to_point(m, cands[ia].vec, cands[ib].vec, target);
  const Complex zs = quadratic_form(m, steered);
  cands.push_back({std::move(steered), zs});

  auto closest = std::min_element(
      cands.begin(), cands.end(), [&](const Candidate& x, const Candidate& y) {
        return std::abs(std::abs(x.value) - best) <
               std::abs(std::abs(y.value) - best);
      });
  out.witness = closest->vec;
  return out;
}

}  // namespace unimetric
