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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unimetric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSquare : public Error {
 public:
  NotSquare(std::size_t rows, std::size_t cols)
      : Error("matrix is not square: " + std::to_string(rows) + "x" +
              std::to_string(cols)) {}
};

class NotUnitary : public Error {
 public:
  explicit NotUnitary(double deviation)
      : Error("matrix is not unitary: max|U^dag U - I| = " +
              std::to_string(deviation)),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t a, std::size_t b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(double norm)
      : Error("vector is not normalized: norm = " + std::to_string(norm)) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidP : public InvalidArgument {
 public:
  explicit InvalidP(double p)
      : InvalidArgument("Schatten exponent must be >= 1, got " +
                        std::to_string(p)) {}
};

class OutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class EmptyInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotAFace : public InvalidArgument {
 public:
  explicit NotAFace(double deviation)
      : InvalidArgument("face basis is not orthonormal: max|B^dag B - I| = " +
                        std::to_string(deviation)) {}
};

class NotCommuting : public InvalidArgument {
 public:
  NotCommuting(std::size_t i, std::size_t j, double norm)
      : InvalidArgument("generators " + std::to_string(i) + " and " +
                        std::to_string(j) + " do not commute: max|[g,h]| = " +
                        std::to_string(norm)),
        first_(i),
        second_(j) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class InvalidDensity : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Malformed textual input. `position` is a zero-based character offset when
/// the failure can be localized.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : Error(what), position_(std::string::npos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t a, std::size_t b)
      : Error("Pauli length mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

}  // namespace unimetric
