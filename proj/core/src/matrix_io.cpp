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

#include "unimetric/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "unimetric/errors.hpp"

namespace unimetric {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      data.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

namespace {

Index read_extent(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw ParseError(std::string("matrix JSON is missing \"") + key + "\"");
  }
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("matrix JSON field \"") + key +
                     "\" must be a non-negative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  const Index rows = read_extent(j, "rows");
  const Index cols = read_extent(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw ParseError("matrix JSON is missing the \"data\" array");
  }
  const auto& data = j.at("data");
  if (static_cast<Index>(data.size()) != rows * cols) {
    throw ParseError("matrix JSON has " + std::to_string(data.size()) +
                     " entries, expected " + std::to_string(rows * cols));
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto& entry = data[k];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw ParseError("matrix entry must be [re, im]", k);
    }
    const Index i = static_cast<Index>(k) / cols;
    const Index c = static_cast<Index>(k) % cols;
    m(i, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  return m;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path,
                       const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << matrix_to_json(m).dump() << '\n';
}

}  // namespace unimetric
