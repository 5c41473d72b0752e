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

#include "unimetric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unimetric/errors.hpp"

namespace unimetric {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double wrap_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2 pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

void require_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidArgument("matrix has a non-finite entry at (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ")");
      }
    }
  }
}

NormalEigen normal_eigen(const ComplexMatrix& w) {
  if (w.rows() != w.cols()) throw NotSquare(w.rows(), w.cols());
  const Index n = w.rows();
  NormalEigen out;
  if (n == 0) return out;

  const ComplexMatrix h1 = (w + w.adjoint()) * 0.5;
  const ComplexMatrix h2 = (w - w.adjoint()) * Complex(0.0, -0.5);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> real_part(h1);
  const Eigen::VectorXd& lambda = real_part.eigenvalues();
  ComplexMatrix vectors = real_part.eigenvectors();

  const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
  const double threshold = kDegeneracyTol * scale;

  Index start = 0;
  while (start < n) {
    Index stop = start + 1;
    while (stop < n && lambda(stop) - lambda(stop - 1) <= threshold) ++stop;
    const Index width = stop - start;
    if (width > 1) {
      const ComplexMatrix basis = vectors.middleCols(start, width);
      const ComplexMatrix compressed = basis.adjoint() * h2 * basis;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> imag_part(compressed);
      vectors.middleCols(start, width) = basis * imag_part.eigenvectors();
    }
    start = stop;
  }

  out.vectors = std::move(vectors);
  out.values.resize(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    const auto v = out.vectors.col(k);
    out.values[static_cast<std::size_t>(k)] = v.dot(w * v);
  }
  return out;
}

ComplexMatrix UnitaryOperator::reconstruct() const {
  const Index n = dim();
  ComplexVector phases(n);
  for (Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, angles_[static_cast<std::size_t>(k)]);
  }
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

UnitaryOperator validate_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw NotSquare(m.rows(), m.cols());
  require_finite(m);
  const Index n = m.rows();
  const double deviation =
      max_abs(m.adjoint() * m - ComplexMatrix::Identity(n, n));
  if (!(deviation <= tol)) throw NotUnitary(deviation);

  NormalEigen eig = normal_eigen(m);
  std::vector<double> raw(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < raw.size(); ++k) {
    raw[k] = wrap_angle(std::arg(eig.values[k]));
  }
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });

  std::vector<double> angles(raw.size());
  ComplexMatrix vectors(n, n);
  for (std::size_t k = 0; k < order.size(); ++k) {
    angles[k] = raw[order[k]];
    vectors.col(static_cast<Index>(k)) =
        eig.vectors.col(static_cast<Index>(order[k]));
  }

  // Departure from unitarity of size tol moves eigenvalues off the circle by
  // up to about n * tol, so looser validation also loosens the residual bound.
  const double residual_tol =
      std::max(kEigenTol, 10.0 * static_cast<double>(n) * tol);
  for (Index k = 0; k < n; ++k) {
    const ComplexVector v = vectors.col(k);
    const double residual =
        (m * v - std::polar(1.0, angles[static_cast<std::size_t>(k)]) * v)
            .norm();
    if (residual > residual_tol) {
      throw Error("unitary eigendecomposition residual " +
                  std::to_string(residual) + " exceeds tolerance");
    }
  }
  return UnitaryOperator(m, std::move(angles), std::move(vectors));
}

double schatten_norm(const ComplexMatrix& m, double p) {
  if (std::isnan(p) || p < 1.0) throw InvalidP(p);
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  const double largest = s.maxCoeff();
  if (std::isinf(p) || largest == 0.0) return largest;
  if (p == 1.0) return s.sum();
  if (p == 2.0) return s.norm();
  double acc = 0.0;
  for (Index k = 0; k < s.size(); ++k) acc += std::pow(s(k) / largest, p);
  return largest * std::pow(acc, 1.0 / p);
}

DensityState DensityState::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare(m.rows(), m.cols());
  require_finite(m);
  if (m.rows() == 0) throw InvalidDensity("density matrix is empty");
  const double skew = max_abs(m - m.adjoint());
  if (skew > kStateTol) {
    throw InvalidDensity("density matrix is not Hermitian: " +
                         std::to_string(skew));
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kStateTol) {
    throw InvalidDensity("density matrix trace is " + std::to_string(trace));
  }
  const ComplexMatrix herm = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm,
                                                  Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kStateTol) {
    throw InvalidDensity("density matrix has negative eigenvalue " +
                         std::to_string(es.eigenvalues()(0)));
  }
  return DensityState(herm, std::nullopt);
}

DensityState DensityState::from_pure(const ComplexVector& psi) {
  require_finite(psi);
  const double norm = psi.norm();
  if (psi.size() == 0 || std::abs(norm - 1.0) > kStateTol) {
    throw NotNormalized(norm);
  }
  return DensityState(psi * psi.adjoint(), psi);
}

DensityState DensityState::maximally_mixed(Index n) {
  if (n < 1) throw InvalidDensity("dimension must be positive");
  return DensityState(
      ComplexMatrix::Identity(n, n) / static_cast<double>(n), std::nullopt);
}

DensityState DensityState::conjugated(const UnitaryOperator& u) const {
  if (u.dim() != dim()) throw DimensionMismatch(u.dim(), dim());
  const ComplexMatrix& um = u.matrix();
  ComplexMatrix rotated = um * matrix_ * um.adjoint();
  rotated = (rotated + rotated.adjoint()) * 0.5;
  std::optional<ComplexVector> pure;
  if (pure_) pure = um * *pure_;
  return DensityState(std::move(rotated), std::move(pure));
}

bool entrywise_less(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      const Complex x = a(i, j), y = b(i, j);
      if (x.real() != y.real()) return x.real() < y.real();
      if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
  }
  return false;
}

double trace_distance(const DensityState& a, const DensityState& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  // Fixed argument order makes the result bitwise symmetric.
  if (entrywise_less(b.matrix(), a.matrix())) return trace_distance(b, a);
  ComplexMatrix diff = a.matrix() - b.matrix();
  diff = (diff + diff.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(diff, Eigen::EigenvaluesOnly);
  const double value = 0.5 * es.eigenvalues().cwiseAbs().sum();
  return std::clamp(value, 0.0, 1.0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

UnitaryOperator haar_random_unitary(Index n, std::mt19937_64& rng) {
  if (n < 1) throw InvalidArgument("unitary dimension must be positive");
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ComplexMatrix ginibre(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) ginibre(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0 ? d / mag : Complex(1.0);
  }
  return validate_unitary(q);
}

UnitaryOperator haar_random_unitary(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random_unitary(n, rng);
}

ComplexVector random_unit_vector(Index n, std::mt19937_64& rng) {
  if (n < 1) throw InvalidArgument("vector dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n);
  do {
    for (Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  } while (v.norm() == 0.0);
  return v / v.norm();
}

UnitaryOperator multiply(const UnitaryOperator& u, const UnitaryOperator& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
  return validate_unitary(u.matrix() * v.matrix());
}

}  // namespace unimetric
