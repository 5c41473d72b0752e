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

#include "unimetric/pauli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "unimetric/errors.hpp"
#include "unimetric/matrix_io.hpp"

namespace unimetric {

namespace {

// Letter index: 0 = I, 1 = X, 2 = Y, 3 = Z.
int letter_index(bool x, bool z) {
  if (!x) return z ? 3 : 0;
  return z ? 2 : 1;
}

// Exponent of i in the single-qubit product P_a P_b.
constexpr std::array<std::array<int, 4>, 4> kProductPhase = {{
    {0, 0, 0, 0},
    {0, 0, 1, 3},  // XY = iZ, XZ = -iY
    {0, 3, 0, 1},  // YX = -iZ, YZ = iX
    {0, 1, 3, 0},  // ZX = iY, ZY = -iX
}};

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

ComplexMatrix letter_matrix(int index) {
  ComplexMatrix m(2, 2);
  switch (index) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

std::string key_of(const PauliElement& p) {
  std::string key = std::to_string(p.phase_power());
  key += p.letters();
  return key;
}

Complex snap_to_root(Complex c) {
  constexpr double kSnap = 1e-8;
  for (const Complex r : {Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                          Complex(0, -1)}) {
    if (std::abs(c - r) <= kSnap) return r;
  }
  return c;
}

}  // namespace

PauliElement PauliElement::identity(std::size_t n) {
  PauliElement p;
  p.x_.assign(n, false);
  p.z_.assign(n, false);
  return p;
}

PauliElement PauliElement::from_letters(std::string_view letters, int power) {
  PauliElement p = identity(letters.size());
  p.power_ = ((power % 4) + 4) % 4;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    switch (letters[k]) {
      case 'I':
        break;
      case 'X':
        p.x_[k] = true;
        break;
      case 'Y':
        p.x_[k] = true;
        p.z_[k] = true;
        break;
      case 'Z':
        p.z_[k] = true;
        break;
      default:
        throw ParseError(std::string("invalid Pauli letter '") + letters[k] +
                             "'",
                         k);
    }
  }
  return p;
}

Complex PauliElement::phase() const {
  static constexpr std::array<Complex, 4> kPowers = {
      Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  return kPowers[static_cast<std::size_t>(power_)];
}

std::string PauliElement::letters() const {
  std::string s(size(), 'I');
  for (std::size_t k = 0; k < size(); ++k) s[k] = kLetters[letter_index(x_[k], z_[k])];
  return s;
}

bool PauliElement::is_scalar() const {
  return std::none_of(x_.begin(), x_.end(), [](bool b) { return b; }) &&
         std::none_of(z_.begin(), z_.end(), [](bool b) { return b; });
}

PauliElement PauliElement::adjoint() const {
  PauliElement p = *this;
  p.power_ = (4 - power_) % 4;
  return p;
}

ComplexMatrix PauliElement::to_matrix() const {
  if (size() > kMaxDenseQubits) {
    throw InvalidArgument("dense Pauli matrices are limited to " +
                          std::to_string(kMaxDenseQubits) + " qubits");
  }
  ComplexMatrix m = ComplexMatrix::Identity(1, 1) * phase();
  for (std::size_t k = 0; k < size(); ++k) {
    m = kron(m, letter_matrix(letter_index(x_[k], z_[k])));
  }
  return m;
}

std::string PauliElement::to_string() const {
  static constexpr std::array<const char*, 4> kPrefix = {"+", "+i", "-", "-i"};
  return kPrefix[static_cast<std::size_t>(power_)] + letters();
}

PauliElement parse_pauli(std::string_view s) {
  std::size_t pos = 0;
  int power = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') power = 2;
    ++pos;
  }
  if (pos < s.size() && s[pos] == 'i') {
    power += 1;
    ++pos;
  }
  if (pos == s.size()) throw ParseError("Pauli string has no letters", pos);
  try {
    return PauliElement::from_letters(s.substr(pos), power);
  } catch (const ParseError& e) {
    throw ParseError("invalid Pauli letter '" +
                         std::string(1, s[pos + e.position()]) + "'",
                     pos + e.position());
  }
}

std::vector<PauliElement> parse_pauli_list(std::string_view s) {
  std::vector<PauliElement> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view item = s.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    try {
      out.push_back(parse_pauli(item));
    } catch (const ParseError& e) {
      const std::size_t offset =
          static_cast<std::size_t>(item.data() - s.data());
      throw ParseError("invalid Pauli list entry \"" + std::string(item) + "\"",
                       offset + e.position());
    }
    if (out.size() > 1 && out.back().size() != out.front().size()) {
      throw LengthMismatch(out.front().size(), out.back().size());
    }
    start = end + 1;
  }
  return out;
}

PauliElement pauli_product(const PauliElement& a, const PauliElement& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  PauliElement out = PauliElement::identity(a.size());
  int power = a.power_ + b.power_;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int la = letter_index(a.x_[k], a.z_[k]);
    const int lb = letter_index(b.x_[k], b.z_[k]);
    power += kProductPhase[static_cast<std::size_t>(la)][static_cast<std::size_t>(lb)];
    out.x_[k] = a.x_[k] != b.x_[k];
    out.z_[k] = a.z_[k] != b.z_[k];
  }
  out.power_ = power % 4;
  return out;
}

int symplectic_form(const PauliElement& a, const PauliElement& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  int acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    acc ^= static_cast<int>(a.x_bits()[k] && b.z_bits()[k]) ^
           static_cast<int>(a.z_bits()[k] && b.x_bits()[k]);
  }
  return acc;
}

double pauli_distance(const PauliElement& a, const PauliElement& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  // a^dag b is a phase times a letter string; d = 0 iff that string is all I.
  return pauli_product(a.adjoint(), b).is_scalar() ? 0.0 : 1.0;
}

PauliSubgroup::PauliSubgroup(std::vector<PauliElement> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw EmptyInput("subgroup needs a generator");
  const std::size_t n = generators_.front().size();
  for (const auto& g : generators_) {
    if (g.size() != n) throw LengthMismatch(n, g.size());
  }
  for (std::size_t i = 0; i < generators_.size() && abelian_; ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (symplectic_form(generators_[i], generators_[j]) != 0) {
        abelian_ = false;
        break;
      }
    }
  }

  std::unordered_set<std::string> seen;
  std::deque<PauliElement> frontier;
  const PauliElement id = PauliElement::identity(n);
  seen.insert(key_of(id));
  elements_.push_back(id);
  frontier.push_back(id);
  enumerated_ = true;
  while (!frontier.empty()) {
    const PauliElement cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators_) {
      PauliElement next = pauli_product(cur, g);
      if (seen.insert(key_of(next)).second) {
        if (elements_.size() >= kMaxEnumeratedGroup) {
          enumerated_ = false;
          elements_.clear();
          return;
        }
        elements_.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
}

StabilizerResult stabilizer_subspace(const PauliSubgroup& k) {
  StabilizerResult out;
  if (!k.is_abelian()) {
    out.non_abelian = true;
    return out;
  }
  if (k.qubits() > kMaxDenseQubits) {
    throw InvalidArgument("stabilizer faces need dense matrices; at most " +
                          std::to_string(kMaxDenseQubits) + " qubits");
  }
  std::vector<UnitaryOperator> gens;
  gens.reserve(k.generators().size());
  for (const auto& g : k.generators()) gens.push_back(validate_unitary(g.to_matrix()));

  const NullSpaceResult ns = null_space(gens);
  for (std::size_t b = 0; b < ns.blocks.size(); ++b) {
    const auto& cols = ns.blocks[b];
    ComplexMatrix basis(ns.common_eigenbasis.rows(),
                        static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      basis.col(static_cast<Index>(c)) =
          ns.common_eigenbasis.col(static_cast<Index>(cols[c]));
    }
    std::vector<Complex> chars;
    for (const Complex& c : ns.characters[b]) chars.push_back(snap_to_root(c));
    out.faces.push_back({SubspaceFace::from_basis(basis), std::move(chars)});
  }
  return out;
}

nlohmann::json to_json(const StabilizerResult& r, const PauliSubgroup& k) {
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : r.faces) {
    nlohmann::json character = nlohmann::json::object();
    for (std::size_t g = 0; g < f.characters.size(); ++g) {
      character[k.generators()[g].to_string()] = {f.characters[g].real(),
                                                  f.characters[g].imag()};
    }
    faces.push_back({{"dimension", f.face.dim()},
                     {"character", std::move(character)},
                     {"basis", matrix_to_json(f.face.basis())}});
  }
  return {{"non_abelian", r.non_abelian}, {"faces", std::move(faces)}};
}

}  // namespace unimetric
