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

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "unimetric/errors.hpp"
#include "unimetric/metrics.hpp"
#include "unimetric/pauli.hpp"

namespace unimetric {
namespace {

using namespace testing;

PauliElement P(std::string_view s) { return parse_pauli(s); }

std::vector<std::string> all_letter_strings(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(s + c);
    }
    out = std::move(next);
  }
  return out;
}

TEST(ParsePauli, Examples) {
  const auto zz = P("+ZZ");
  EXPECT_EQ(zz.phase_power(), 0);
  EXPECT_EQ(zz.letters(), "ZZ");
  const auto mixy = P("-iXY");
  EXPECT_EQ(mixy.phase(), Complex(0, -1));
  EXPECT_EQ(mixy.letters(), "XY");
  EXPECT_EQ(P("iZ").phase(), Complex(0, 1));
  EXPECT_EQ(P("-Z").phase(), Complex(-1, 0));
  EXPECT_EQ(P("Y").x_bits(), std::vector<bool>{true});
  EXPECT_EQ(P("Y").z_bits(), std::vector<bool>{true});
  EXPECT_EQ(P("-iXY").to_string(), "-iXY");
  EXPECT_EQ(P("ZI").to_string(), "+ZI");
}

TEST(ParsePauli, Errors) {
  try {
    P("XQ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  try {
    P("-iXQ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("+i"), ParseError);
  EXPECT_THROW(P("x"), ParseError);
}

TEST(ParsePauliList, SplitsAndChecksLengths) {
  const auto list = parse_pauli_list("+ZZ, +XX");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[1].letters(), "XX");
  EXPECT_THROW(parse_pauli_list("ZZ,X"), LengthMismatch);
  try {
    parse_pauli_list("ZZ,XQ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_pauli_list("ZZ,"), ParseError);
}

TEST(PauliProduct, Examples) {
  EXPECT_EQ(pauli_product(P("X"), P("Y")), P("+iZ"));
  EXPECT_EQ(pauli_product(P("Z"), P("Z")), P("I"));
  EXPECT_EQ(pauli_product(P("XZ"), P("ZX")), P("+YY"));
  EXPECT_THROW(pauli_product(P("X"), P("XX")), LengthMismatch);
}

TEST(PauliProduct, MatchesDenseMatricesExhaustively) {
  const std::vector<std::string> phases{"+", "+i", "-", "-i"};
  for (const auto& a : all_letter_strings(2)) {
    for (const auto& b : all_letter_strings(2)) {
      for (std::size_t pa = 0; pa < 4; ++pa) {
        const auto x = P(phases[pa] + a), y = P(phases[(pa * 3) % 4] + b);
        const auto xy = pauli_product(x, y);
        EXPECT_LE(max_abs(xy.to_matrix() - x.to_matrix() * y.to_matrix()), 1e-15)
            << x.to_string() << " * " << y.to_string();
        // g^2 = +-I.
        const auto sq = pauli_product(P(a), P(a));
        EXPECT_TRUE(sq.is_scalar());
        EXPECT_EQ(sq.phase_power() % 2, 0);
        // Symplectic form decides commutation.
        const ComplexMatrix ma = P(a).to_matrix(), mb = P(b).to_matrix();
        const bool commute = max_abs(ma * mb - mb * ma) < 1e-12;
        EXPECT_EQ(symplectic_form(P(a), P(b)) == 0, commute);
      }
    }
  }
}

TEST(PauliElement, AdjointIsInverse) {
  for (const auto& s : {"+iXY", "-ZZ", "-iIY", "+XI"}) {
    const auto g = P(s);
    const auto e = pauli_product(g, g.adjoint());
    EXPECT_TRUE(e.is_scalar());
    EXPECT_EQ(e.phase_power(), 0);
  }
  EXPECT_THROW(PauliElement::identity(9).to_matrix(), InvalidArgument);
}

TEST(PauliDistance, Examples) {
  EXPECT_EQ(pauli_distance(P("X"), P("X")), 0.0);
  EXPECT_EQ(pauli_distance(P("X"), P("iX")), 0.0);
  EXPECT_EQ(pauli_distance(P("II"), P("ZZ")), 1.0);
  EXPECT_THROW(pauli_distance(P("X"), P("XX")), LengthMismatch);
}

TEST(PauliDistance, AgreesWithDenseSupDistance) {
  const auto id = U(identity(8));
  for (const auto& s : all_letter_strings(3)) {
    const auto g = P(s);
    const double dense = sup_distance(id, validate_unitary(g.to_matrix())).value;
    EXPECT_NEAR(pauli_distance(PauliElement::identity(3), g), dense, 1e-10) << s;
  }
}

TEST(PauliSubgroup, ClosureAndAbelianness) {
  const PauliSubgroup k(parse_pauli_list("ZZ,XX"));
  EXPECT_TRUE(k.is_abelian());
  EXPECT_TRUE(k.enumerated());
  // {II, ZZ, XX, -YY}.
  EXPECT_EQ(k.elements().size(), 4u);
  const PauliSubgroup xz(parse_pauli_list("X,Z"));
  EXPECT_FALSE(xz.is_abelian());
  // {+-I, +-X, +-Z, +-iY}; iI is not generated.
  EXPECT_EQ(xz.elements().size(), 8u);
  for (const auto& a : xz.elements()) {
    for (const auto& b : xz.elements()) {
      const auto ab = pauli_product(a, b);
      EXPECT_NE(std::find(xz.elements().begin(), xz.elements().end(), ab),
                xz.elements().end());
    }
  }
  EXPECT_THROW(PauliSubgroup({}), EmptyInput);
}

TEST(PauliSubgroup, LargeGroupsAreNotEnumerated) {
  // 17 independent commuting generators on 17 qubits: 2^17 elements.
  std::vector<PauliElement> gens;
  for (std::size_t k = 0; k < 17; ++k) {
    std::string s(17, 'I');
    s[k] = 'Z';
    gens.push_back(P(s));
  }
  const PauliSubgroup k(gens);
  EXPECT_FALSE(k.enumerated());
  EXPECT_TRUE(k.elements().empty());
  EXPECT_TRUE(k.is_abelian());
}

TEST(Stabilizer, SingleParity) {
  const PauliSubgroup k(parse_pauli_list("+ZZ"));
  const auto r = stabilizer_subspace(k);
  EXPECT_FALSE(r.non_abelian);
  ASSERT_EQ(r.faces.size(), 2u);
  for (const auto& f : r.faces) {
    EXPECT_EQ(f.face.dim(), 2);
    const Complex c = f.characters[0];
    EXPECT_TRUE(c == Complex(1) || c == Complex(-1));
    // Even parity span{|00>,|11>} for +1; odd span{|01>,|10>} for -1.
    const ComplexMatrix proj = f.face.basis() * f.face.basis().adjoint();
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    if (c == Complex(1)) {
      expected(0, 0) = expected(3, 3) = 1;
    } else {
      expected(1, 1) = expected(2, 2) = 1;
    }
    EXPECT_LE(max_abs(proj - expected), 1e-10);
  }
}

TEST(Stabilizer, BellFacesAndCharacters) {
  const PauliSubgroup k(parse_pauli_list("ZZ,XX"));
  const auto r = stabilizer_subspace(k);
  ASSERT_EQ(r.faces.size(), 4u);
  for (const auto& f : r.faces) {
    EXPECT_EQ(f.face.dim(), 1);
    // c(gh) = c(g) c(h) for every element of the group.
    const ComplexVector v = f.face.basis().col(0);
    for (const auto& g : k.elements()) {
      const Complex cg = v.dot(g.to_matrix() * v);
      for (const auto& h : k.elements()) {
        const Complex ch = v.dot(h.to_matrix() * v);
        const Complex cgh = v.dot(pauli_product(g, h).to_matrix() * v);
        EXPECT_LE(std::abs(cgh - cg * ch), 1e-10);
      }
    }
    EXPECT_EQ(f.characters.size(), 2u);
    EXPECT_LE(std::abs(v.dot(P("-YY").to_matrix() * v) -
                       f.characters[0] * f.characters[1]), 1e-10);
  }
}

TEST(Stabilizer, VanishingDistanceAndFaceProperty) {
  const PauliSubgroup k(parse_pauli_list("ZZI,IZZ"));
  const auto r = stabilizer_subspace(k);
  ASSERT_EQ(r.faces.size(), 4u);
  for (const auto& f : r.faces) {
    EXPECT_EQ(f.face.dim(), 2);
    const ComplexMatrix& b = f.face.basis();
    const ComplexMatrix proj = b * b.adjoint();
    for (Index c = 0; c < b.cols(); ++c) {
      const ComplexVector a = b.col(c);
      for (const auto& g : k.elements()) {
        for (const auto& h : k.elements()) {
          const ComplexMatrix w = g.to_matrix().adjoint() * h.to_matrix();
          const double n2 = a.squaredNorm();
          const double d2 = 1.0 - std::norm(a.dot(w * a)) / (n2 * n2);
          EXPECT_LE(std::sqrt(std::max(0.0, d2)), 1e-8);
        }
      }
    }
    const ComplexVector plus = (b.col(0) + b.col(1)) / 2.0;
    const ComplexVector minus = (b.col(0) - b.col(1)) / 2.0;
    EXPECT_LE((proj * plus - plus).norm(), 1e-10);
    EXPECT_LE((proj * minus - minus).norm(), 1e-10);
  }
}

TEST(Stabilizer, ImaginaryCharacterAndNonAbelian) {
  const auto iz = stabilizer_subspace(PauliSubgroup({P("iZ")}));
  ASSERT_EQ(iz.faces.size(), 2u);
  for (const auto& f : iz.faces) {
    const Complex c = f.characters[0];
    EXPECT_TRUE(c == Complex(0, 1) || c == Complex(0, -1));
  }
  const auto xz = stabilizer_subspace(PauliSubgroup(parse_pauli_list("X,Z")));
  EXPECT_TRUE(xz.non_abelian);
  EXPECT_TRUE(xz.faces.empty());
}

TEST(Stabilizer, Json) {
  const PauliSubgroup k(parse_pauli_list("ZZ"));
  const auto j = to_json(stabilizer_subspace(k), k);
  EXPECT_EQ(j["non_abelian"], false);
  ASSERT_EQ(j["faces"].size(), 2u);
  EXPECT_EQ(j["faces"][0]["dimension"], 2);
  EXPECT_TRUE(j["faces"][0]["character"].contains("+ZZ"));
}

}  // namespace
}  // namespace unimetric
