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
#include <string>
#include <string_view>
#include <vector>

#include "unimetric/linalg.hpp"
#include "unimetric/subsets.hpp"

namespace unimetric {

/// Largest qubit count for which dense matrices are materialized.
inline constexpr std::size_t kMaxDenseQubits = 8;
/// Largest subgroup whose elements are enumerated.
inline constexpr std::size_t kMaxEnumeratedGroup = std::size_t{1} << 16;

/// i^power * P_1 (x) ... (x) P_n with Hermitian letters P_j in {I, X, Y, Z}.
/// Letters are stored in symplectic form: X -> (1,0), Y -> (1,1),
/// Z -> (0,1), I -> (0,0).
class PauliElement {
 public:
  PauliElement() = default;
  /// Identity on n qubits.
  static PauliElement identity(std::size_t n);
  /// `letters` over {I, X, Y, Z}; `power` is the exponent of i (mod 4).
  static PauliElement from_letters(std::string_view letters, int power = 0);

  std::size_t size() const { return x_.size(); }
  /// Exponent of i in {0, 1, 2, 3}.
  int phase_power() const { return power_; }
  Complex phase() const;
  std::string letters() const;
  const std::vector<bool>& x_bits() const { return x_; }
  const std::vector<bool>& z_bits() const { return z_; }

  /// True when every letter is I.
  bool is_scalar() const;
  /// Adjoint, equal to the group inverse.
  PauliElement adjoint() const;
  /// Dense 2^n x 2^n matrix. Throws InvalidArgument past kMaxDenseQubits.
  ComplexMatrix to_matrix() const;
  /// "+XZ", "-iYY", ...
  std::string to_string() const;

  friend bool operator==(const PauliElement&, const PauliElement&) = default;

 private:
  int power_ = 0;
  std::vector<bool> x_;
  std::vector<bool> z_;
  friend PauliElement pauli_product(const PauliElement&, const PauliElement&);
};

/// Accepts an optional prefix "+", "-", "+i", "-i" or "i" followed by at
/// least one letter from {I, X, Y, Z}. Throws ParseError with the offending
/// character offset.
PauliElement parse_pauli(std::string_view s);

/// Comma-separated list, e.g. "+ZZ,+XX". Throws ParseError, LengthMismatch.
std::vector<PauliElement> parse_pauli_list(std::string_view s);

/// Group product with exact phase. Throws LengthMismatch.
PauliElement pauli_product(const PauliElement& a, const PauliElement& b);

/// 0 when a and b commute, 1 when they anticommute.
int symplectic_form(const PauliElement& a, const PauliElement& b);

/// d(a, b), exactly 0 when a^dag b is a multiple of the identity and 1
/// otherwise. Throws LengthMismatch.
double pauli_distance(const PauliElement& a, const PauliElement& b);

class PauliSubgroup {
 public:
  /// Throws EmptyInput or LengthMismatch.
  explicit PauliSubgroup(std::vector<PauliElement> generators);

  const std::vector<PauliElement>& generators() const { return generators_; }
  /// Full closure when it has at most kMaxEnumeratedGroup elements; empty
  /// otherwise (see enumerated()).
  const std::vector<PauliElement>& elements() const { return elements_; }
  bool enumerated() const { return enumerated_; }
  bool is_abelian() const { return abelian_; }
  std::size_t qubits() const { return generators_.front().size(); }

 private:
  std::vector<PauliElement> generators_;
  std::vector<PauliElement> elements_;
  bool enumerated_ = false;
  bool abelian_ = true;
};

struct StabilizerFace {
  SubspaceFace face;
  /// c(g) for each generator, in generator order. Values within 1e-8 of a
  /// fourth root of unity are snapped onto it.
  std::vector<Complex> characters;
};

struct StabilizerResult {
  /// Set when two generators anticommute; `faces` is then empty.
  bool non_abelian = false;
  std::vector<StabilizerFace> faces;
};

/// Maximal subspaces on which every element of the group acts as a scalar.
/// Throws InvalidArgument when the group acts on more than kMaxDenseQubits.
StabilizerResult stabilizer_subspace(const PauliSubgroup& k);

/// {"non_abelian": bool, "faces": [{"dimension", "character", "basis"}]}.
nlohmann::json to_json(const StabilizerResult& r, const PauliSubgroup& k);

}  // namespace unimetric
