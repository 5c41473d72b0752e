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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace unimetric {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Default bound on max|U^dag U - I| accepted by validate_unitary.
inline constexpr double kUnitarityTol = 1e-10;
/// Bound on the eigenpair residual |U v - e^{i theta} v|.
inline constexpr double kEigenTol = 1e-8;
/// Relative threshold used to group near-equal eigenvalues of the Hermitian
/// part before splitting them with the anti-Hermitian part.
inline constexpr double kDegeneracyTol = 1e-8;
/// Tolerance for Hermiticity, trace and positivity of density matrices.
inline constexpr double kStateTol = 1e-10;

/// Largest entry modulus.
double max_abs(const ComplexMatrix& m);

/// Maps any real angle into [0, 2 pi).
double wrap_angle(double theta);

/// Throws InvalidArgument when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m);

/// Eigenpairs of a normal matrix. `values[k]` belongs to column k of
/// `vectors`, and the columns are orthonormal.
struct NormalEigen {
  std::vector<Complex> values;
  ComplexMatrix vectors;
};

/// Diagonalizes a normal matrix W by splitting it into Hermitian parts
/// H1 = (W + W^dag)/2 and H2 = (W - W^dag)/2i. H1 is diagonalized first;
/// inside every cluster of H1 eigenvalues closer than kDegeneracyTol
/// (relative to the spectral radius) the compression of H2 is diagonalized.
/// Eigenvalues are reported as Rayleigh quotients v^dag W v.
///
/// The result is only meaningful for normal input; no normality check is made.
NormalEigen normal_eigen(const ComplexMatrix& w);

/// A validated unitary matrix together with its spectral decomposition.
/// Instances are created by validate_unitary or haar_random_unitary and are
/// immutable afterwards.
class UnitaryOperator {
 public:
  const ComplexMatrix& matrix() const { return matrix_; }
  /// Eigenvalue arguments in [0, 2 pi), sorted ascending.
  const std::vector<double>& eigen_angles() const { return angles_; }
  /// Column k is an eigenvector for eigen_angles()[k].
  const ComplexMatrix& eigen_vectors() const { return vectors_; }
  Index dim() const { return matrix_.rows(); }

  /// V diag(e^{i theta}) V^dag.
  ComplexMatrix reconstruct() const;

 private:
  friend UnitaryOperator validate_unitary(const ComplexMatrix& m, double tol);
  UnitaryOperator(ComplexMatrix m, std::vector<double> angles,
                  ComplexMatrix vectors)
      : matrix_(std::move(m)),
        angles_(std::move(angles)),
        vectors_(std::move(vectors)) {}

  ComplexMatrix matrix_;
  std::vector<double> angles_;
  ComplexMatrix vectors_;
};

/// Checks unitarity and computes the spectral decomposition.
/// Throws NotSquare, NotUnitary, or InvalidArgument for non-finite entries.
UnitaryOperator validate_unitary(const ComplexMatrix& m,
                                 double tol = kUnitarityTol);

/// Schatten p-norm from singular values; p = kInfinity gives the operator
/// norm. Throws InvalidP for p < 1.
double schatten_norm(const ComplexMatrix& m, double p);

/// Positive semidefinite, trace-one Hermitian matrix. Pure states also keep
/// their state vector.
class DensityState {
 public:
  /// Validates Hermiticity, trace and positivity within kStateTol.
  static DensityState from_matrix(const ComplexMatrix& m);
  /// |psi><psi| for a unit vector psi. Throws NotNormalized.
  static DensityState from_pure(const ComplexVector& psi);
  /// I/n.
  static DensityState maximally_mixed(Index n);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::optional<ComplexVector>& pure_vector() const { return pure_; }
  Index dim() const { return matrix_.rows(); }

  /// U rho U^dag; the pure vector, if any, is carried along as U psi.
  DensityState conjugated(const UnitaryOperator& u) const;

 private:
  DensityState(ComplexMatrix m, std::optional<ComplexVector> pure)
      : matrix_(std::move(m)), pure_(std::move(pure)) {}

  ComplexMatrix matrix_;
  std::optional<ComplexVector> pure_;
};

/// Strict total order on matrices (shape, then entries column by column).
/// Symmetric functions use it to fix the order of their arguments so that
/// f(a, b) and f(b, a) agree bit for bit.
bool entrywise_less(const ComplexMatrix& a, const ComplexMatrix& b);

/// Half the trace norm of the difference. Throws DimensionMismatch.
double trace_distance(const DensityState& a, const DensityState& b);

/// Kronecker product, a's index major.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-distributed unitary from a seeded Ginibre matrix and a phase-fixed QR
/// factorization.
UnitaryOperator haar_random_unitary(Index n, std::uint64_t seed);
UnitaryOperator haar_random_unitary(Index n, std::mt19937_64& rng);

/// Uniformly distributed unit vector.
ComplexVector random_unit_vector(Index n, std::mt19937_64& rng);

/// Convenience: validate_unitary(u.matrix() * v.matrix()).
UnitaryOperator multiply(const UnitaryOperator& u, const UnitaryOperator& v);

}  // namespace unimetric
