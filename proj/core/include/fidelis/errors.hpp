// Copyright 2026 The Fidelis Authors
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

namespace fidelis {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (files, documents, arguments).
class InputError : public Error {
public:
  using Error::Error;
};

/// Well-formed input that uses a feature the model does not cover.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class UnsupportedGateError : public UnsupportedError {
public:
  explicit UnsupportedGateError(const std::string& gate)
      : UnsupportedError("unsupported gate '" + gate + "'"), gate_(gate) {}

  const std::string& gate() const noexcept { return gate_; }

private:
  std::string gate_;
};

class CalibrationError : public InputError {
public:
  using InputError::InputError;
};

class MissingCalibrationError : public CalibrationError {
public:
  using CalibrationError::CalibrationError;
};

/// Oracle refused a state that would exceed its qubit cap.
class SizeError : public UnsupportedError {
public:
  using UnsupportedError::UnsupportedError;
};

class DegenerateVarianceError : public InputError {
public:
  using InputError::InputError;
};

} // namespace fidelis
