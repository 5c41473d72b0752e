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

#include "unimetric/subsets.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "unimetric/errors.hpp"
#include "unimetric/matrix_io.hpp"
#include "unimetric/numrange.hpp"

namespace unimetric {

SubspaceFace SubspaceFace::from_basis(const ComplexMatrix& basis) {
  require_finite(basis);
  if (basis.cols() == 0 || basis.cols() > basis.rows()) {
    throw NotAFace(kInfinity);
  }
  const double dev = max_abs(basis.adjoint() * basis -
                             ComplexMatrix::Identity(basis.cols(), basis.cols()));
  if (dev > kStateTol) throw NotAFace(dev);
  return SubspaceFace(basis);
}

SubspaceFace SubspaceFace::full(Index n) {
  return SubspaceFace(ComplexMatrix::Identity(n, n));
}

MetricResult face_distance(const UnitaryOperator& u, const UnitaryOperator& v,
                           const SubspaceFace& face) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
  if (face.ambient_dim() != u.dim()) {
    throw DimensionMismatch(u.dim(), face.ambient_dim());
  }
  const ComplexMatrix& b = face.basis();
  const ComplexMatrix compressed =
      b.adjoint() * (u.matrix().adjoint() * v.matrix()) * b;
  const NumericalRangeResult nr =
      numrange_origin_distance({compressed, 720, 40});

  MetricResult out;
  out.value = std::sqrt(std::clamp(1.0 - nr.distance * nr.distance, 0.0, 1.0));
  ComplexVector lifted = b * nr.witness;
  out.maximizer = lifted / lifted.norm();
  out.method = MetricMethod::Optimization;
  out.tolerance = 1e-6;
  return out;
}

ComplexMatrix compress_second(const ComplexMatrix& w, const ComplexVector& b,
                              Index dim_a, Index dim_b) {
  ComplexMatrix out(dim_a, dim_a);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index k = 0; k < dim_a; ++k) {
      const auto block = w.block(i * dim_b, k * dim_b, dim_b, dim_b);
      out(i, k) = b.dot(block * b);
    }
  }
  return out;
}

ComplexMatrix compress_first(const ComplexMatrix& w, const ComplexVector& a,
                             Index dim_a, Index dim_b) {
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index k = 0; k < dim_a; ++k) {
      out += std::conj(a(i)) * a(k) *
             w.block(i * dim_b, k * dim_b, dim_b, dim_b);
    }
  }
  return out;
}

namespace {

double product_overlap(const ComplexMatrix& w, const ComplexVector& a,
                       const ComplexVector& b) {
  const ComplexVector ab = kron(a, b);
  return std::abs(ab.dot(w * ab));
}

}  // namespace

SeparableReport separable_search(const UnitaryOperator& u,
                                 const UnitaryOperator& v,
                                 const SeparableProblem& prob) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
  if (prob.dim_a < 1 || prob.dim_b < 1 || prob.dim_a * prob.dim_b != u.dim()) {
    throw DimensionMismatch("separable split " + std::to_string(prob.dim_a) +
                            "x" + std::to_string(prob.dim_b) +
                            " does not match dimension " +
                            std::to_string(u.dim()));
  }
  const std::size_t restarts = std::max<std::size_t>(prob.restarts, 1);
  const ComplexMatrix w = u.matrix().adjoint() * v.matrix();
  constexpr double kConverged = 1e-10;

  SeparableReport report;
  report.histories.resize(restarts);
  for (std::size_t r = 0; r < restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(prob.seed),
                      static_cast<std::uint32_t>(prob.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    ComplexVector a = random_unit_vector(prob.dim_a, rng);
    ComplexVector b = random_unit_vector(prob.dim_b, rng);
    double obj = product_overlap(w, a, b);
    std::vector<double>& history = report.histories[r];
    history.push_back(obj);

    for (std::size_t it = 0; it < prob.max_alternations && obj > 0.0; ++it) {
      const double before = obj;

      const NumericalRangeResult na =
          numrange_origin_distance({compress_second(w, b, prob.dim_a, prob.dim_b)});
      const double obj_a = product_overlap(w, na.witness, b);
      if (obj_a < obj) {
        a = na.witness;
        obj = obj_a;
      }
      history.push_back(obj);

      const NumericalRangeResult nb =
          numrange_origin_distance({compress_first(w, a, prob.dim_a, prob.dim_b)});
      const double obj_b = product_overlap(w, a, nb.witness);
      if (obj_b < obj) {
        b = nb.witness;
        obj = obj_b;
      }
      history.push_back(obj);

      if (before - obj < kConverged) break;
    }

    if (r == 0 || obj < report.min_overlap) {
      report.min_overlap = obj;
      report.best_restart = r;
      report.best_a = a;
      report.best_b = b;
    }
    // Nothing beats an exactly vanishing overlap.
    if (report.min_overlap <= 1e-14) {
      report.histories.resize(r + 1);
      break;
    }
  }

  MetricResult& m = report.metric;
  m.value = std::sqrt(
      std::clamp(1.0 - report.min_overlap * report.min_overlap, 0.0, 1.0));
  m.maximizer = kron(report.best_a, report.best_b);
  m.method = MetricMethod::Optimization;
  m.tolerance = 1e-6;
  return report;
}

MetricResult separable_distance(const UnitaryOperator& u,
                                const UnitaryOperator& v,
                                const SeparableProblem& prob) {
  return separable_search(u, v, prob).metric;
}

namespace {

// Groups eigenvalues that agree within `tol`; each group lists positions.
std::vector<std::vector<Index>> cluster_eigenvalues(
    const std::vector<Complex>& values, double tol) {
  std::vector<std::vector<Index>> groups;
  std::vector<Complex> reps;
  for (std::size_t k = 0; k < values.size(); ++k) {
    bool placed = false;
    for (std::size_t g = 0; g < reps.size(); ++g) {
      if (std::abs(values[k] - reps[g]) <= tol) {
        groups[g].push_back(static_cast<Index>(k));
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(values[k]);
      groups.push_back({static_cast<Index>(k)});
    }
  }
  return groups;
}

}  // namespace

NullSpaceResult null_space(const std::vector<UnitaryOperator>& generators) {
  if (generators.empty()) throw EmptyInput("no generators given");
  const Index n = generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != n) throw DimensionMismatch(n, g.dim());
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      const ComplexMatrix& g = generators[i].matrix();
      const ComplexMatrix& h = generators[j].matrix();
      const double comm = max_abs(g * h - h * g);
      if (comm > kCommutationTol) throw NotCommuting(i, j, comm);
    }
  }

  // Refine the block decomposition one generator at a time.
  constexpr double kClusterTol = 1e-6;
  std::vector<ComplexMatrix> blocks = {ComplexMatrix::Identity(n, n)};
  for (const auto& gen : generators) {
    std::vector<ComplexMatrix> refined;
    for (const ComplexMatrix& basis : blocks) {
      const ComplexMatrix compressed = basis.adjoint() * gen.matrix() * basis;
      const NormalEigen eig = normal_eigen(compressed);
      for (const auto& group : cluster_eigenvalues(eig.values, kClusterTol)) {
        ComplexMatrix cols(basis.cols(), static_cast<Index>(group.size()));
        for (std::size_t c = 0; c < group.size(); ++c) {
          cols.col(static_cast<Index>(c)) = eig.vectors.col(group[c]);
        }
        ComplexMatrix sub = basis * cols;
        // Re-orthonormalize to keep accumulated rounding out of later steps.
        Eigen::HouseholderQR<ComplexMatrix> qr(sub);
        ComplexMatrix q = qr.householderQ() *
                          ComplexMatrix::Identity(sub.rows(), sub.cols());
        for (Index c = 0; c < q.cols(); ++c) {
          const Complex d = qr.matrixQR()(c, c);
          if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
        }
        refined.push_back(std::move(q));
      }
    }
    blocks = std::move(refined);
  }

  NullSpaceResult out;
  out.common_eigenbasis.resize(n, n);
  Index col = 0;
  for (const ComplexMatrix& basis : blocks) {
    std::vector<std::size_t> indices;
    std::vector<Complex> chars;
    for (const auto& gen : generators) {
      const ComplexMatrix c = basis.adjoint() * gen.matrix() * basis;
      chars.push_back(c.trace() / static_cast<double>(basis.cols()));
    }
    for (Index c = 0; c < basis.cols(); ++c) {
      out.common_eigenbasis.col(col) = basis.col(c);
      indices.push_back(static_cast<std::size_t>(col));
      ++col;
    }
    out.blocks.push_back(std::move(indices));
    out.characters.push_back(std::move(chars));
  }
  return out;
}

nlohmann::json to_json(const NullSpaceResult& r) {
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t b = 0; b < r.blocks.size(); ++b) {
    nlohmann::json character = nlohmann::json::array();
    for (const Complex& c : r.characters[b]) {
      character.push_back({c.real(), c.imag()});
    }
    blocks.push_back({{"character", std::move(character)},
                      {"basis_columns", r.blocks[b]}});
  }
  return {{"blocks", std::move(blocks)},
          {"basis", matrix_to_json(r.common_eigenbasis)}};
}

}  // namespace unimetric
