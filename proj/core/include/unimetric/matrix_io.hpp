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

#include <filesystem>
#include <nlohmann/json.hpp>

#include "unimetric/linalg.hpp"

namespace unimetric {

/// Matrices on disk and on the wire are
///   {"rows": r, "cols": c, "data": [[re, im], ...]}
/// with `data` in row-major order. Doubles are written in shortest
/// round-trip form, so a write/read cycle is bit exact.
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Throws ParseError on any schema violation.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path,
                       const ComplexMatrix& m);

}  // namespace unimetric
