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

#include <cstdint>
#include <nlohmann/json.hpp>
#include <vector>

#include "unimetric/linalg.hpp"
#include "unimetric/metrics.hpp"

namespace unimetric {

/// States supported on span(basis). The columns must be orthonormal.
class SubspaceFace {
 public:
  /// Throws NotAFace when basis^dag basis deviates from I by more than 1e-10.
  static SubspaceFace from_basis(const ComplexMatrix& basis);
  /// The whole space.
  static SubspaceFace full(Index n);

  const ComplexMatrix& basis() const { return basis_; }
  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }

 private:
  explicit SubspaceFace(ComplexMatrix b) : basis_(std::move(b)) {}
  ComplexMatrix basis_;
};

/// sup of d_rho over states supported in the face. Reduces to the distance
/// from 0 to the numerical range of B^dag U^dag V B.
MetricResult face_distance(const UnitaryOperator& u, const UnitaryOperator& v,
                           const SubspaceFace& face);

struct SeparableProblem {
  Index dim_a = 2;
  Index dim_b = 2;
  std::size_t restarts = 32;
  std::size_t max_alternations = 200;
  std::uint64_t seed = 0;
};

struct SeparableReport {
  MetricResult metric;
  /// Smallest |<a b|U^dag V|a b>| found.
  double min_overlap = 1.0;
  std::size_t best_restart = 0;
  ComplexVector best_a;
  ComplexVector best_b;
  /// Objective after every half step, per restart.
  std::vector<std::vector<double>> histories;
};

/// sup of d_rho over separable states of H_a (x) H_b. The supremum sits on
/// pure product states; it is approximated by alternating minimization of
/// |<a b|U^dag V|a b>| from random product starts. The reported value can
/// only underestimate the true supremum.
MetricResult separable_distance(const UnitaryOperator& u,
                                const UnitaryOperator& v,
                                const SeparableProblem& prob);

/// Same search with per-restart diagnostics.
SeparableReport separable_search(const UnitaryOperator& u,
                                 const UnitaryOperator& v,
                                 const SeparableProblem& prob);

/// (I (x) <b|) W (I (x) |b>), a dim_a x dim_a matrix.
ComplexMatrix compress_second(const ComplexMatrix& w, const ComplexVector& b,
                              Index dim_a, Index dim_b);
/// (<a| (x) I) W (|a> (x) I), a dim_b x dim_b matrix.
ComplexMatrix compress_first(const ComplexMatrix& w, const ComplexVector& a,
                             Index dim_a, Index dim_b);

/// Bound on max|[g, h]| for generators treated as commuting.
inline constexpr double kCommutationTol = 1e-8;

struct NullSpaceResult {
  /// Orthonormal simultaneous eigenvectors of every generator.
  ComplexMatrix common_eigenbasis;
  /// Column indices grouped by joint eigenvalue.
  std::vector<std::vector<std::size_t>> blocks;
  /// characters[b][g]: eigenvalue of generator g on block b.
  std::vector<std::vector<Complex>> characters;
};

/// Joint eigenspaces of a commuting family of unitaries. States commuting
/// with every generator are exactly the mixtures of projectors onto these
/// basis vectors. Throws EmptyInput, DimensionMismatch, NotCommuting.
NullSpaceResult null_space(const std::vector<UnitaryOperator>& generators);

/// {"blocks": [{"character": [[re, im], ...], "basis_columns": [...]}],
///  "basis": matrix JSON}
nlohmann::json to_json(const NullSpaceResult& r);

}  // namespace unimetric
