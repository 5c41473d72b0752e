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

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "unimetric/errors.hpp"
#include "unimetric/matrix_io.hpp"

namespace unimetric {
namespace {

TEST(MatrixIo, LayoutIsRowMajor) {
  ComplexMatrix m(2, 3);
  m << 1, 2, Complex(3, -1), 4, 5, 6;
  const auto j = matrix_to_json(m);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["cols"], 3);
  EXPECT_EQ(j["data"][2][0], 3.0);
  EXPECT_EQ(j["data"][2][1], -1.0);
  EXPECT_EQ(j["data"][3][0], 4.0);
}

TEST(MatrixIo, RoundTripIsBitExact) {
  std::mt19937_64 rng(1);
  const ComplexMatrix m = haar_random_unitary(5, rng).matrix();
  const auto text = matrix_to_json(m).dump();
  const ComplexMatrix back = matrix_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(max_abs(back - m), 0.0);
}

TEST(MatrixIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "unimetric_io_test.json";
  const ComplexMatrix m = testing::pauli_y();
  write_matrix_file(path, m);
  EXPECT_EQ(max_abs(read_matrix_file(path) - m), 0.0);
  std::filesystem::remove(path);
}

TEST(MatrixIo, SchemaViolations) {
  using nlohmann::json;
  EXPECT_THROW(matrix_from_json(json::array()), ParseError);
  EXPECT_THROW(matrix_from_json(json{{"rows", 1}, {"cols", 1}}), ParseError);
  EXPECT_THROW(matrix_from_json(json{{"rows", 1}, {"cols", 2}, {"data", {{1, 0}}}}),
               ParseError);
  EXPECT_THROW(matrix_from_json(json{{"rows", 1}, {"cols", 1}, {"data", {{1}}}}),
               ParseError);
  EXPECT_THROW(
      matrix_from_json(json{{"rows", 1}, {"cols", 1}, {"data", {{"a", 0}}}}),
      ParseError);
  EXPECT_THROW(matrix_from_json(json{{"rows", -1}, {"cols", 1}, {"data", json::array()}}),
               ParseError);
}

TEST(MatrixIo, MissingAndMalformedFiles) {
  EXPECT_THROW(read_matrix_file("/nonexistent/unimetric.json"), ParseError);
  const auto path = std::filesystem::temp_directory_path() / "unimetric_bad.json";
  std::ofstream(path) << "{not json";
  EXPECT_THROW(read_matrix_file(path), ParseError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace unimetric
