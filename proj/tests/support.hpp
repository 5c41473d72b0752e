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

#include <complex>
#include <cstdint>
#include <random>

#include "unimetric/linalg.hpp"

namespace unimetric::testing {

inline ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline ComplexMatrix pauli_z() { return diag2(1, -1); }

inline ComplexMatrix identity(Index n) {
  return ComplexMatrix::Identity(n, n);
}

inline ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

inline ComplexMatrix swap_gate() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

inline ComplexVector ket(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Index>(amps.size()));
  Index k = 0;
  for (const Complex& a : amps) v(k++) = a;
  return v;
}

inline UnitaryOperator U(const ComplexMatrix& m) { return validate_unitary(m); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Unitary with prescribed eigenangles in a Haar-random eigenbasis.
inline UnitaryOperator with_spectrum(const std::vector<double>& angles,
                                     std::mt19937_64& rng) {
  const Index n = static_cast<Index>(angles.size());
  const ComplexMatrix q = haar_random_unitary(n, rng).matrix();
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) d(k, k) = std::polar(1.0, angles[static_cast<std::size_t>(k)]);
  return validate_unitary(q * d * q.adjoint());
}

}  // namespace unimetric::testing
