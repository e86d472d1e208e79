// Copyright 2026 The mczeno Authors.
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

#include <stdexcept>
#include <string>

namespace mczeno {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Qubit or matrix dimensions disagree, or exceed a configured cap.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or structured input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised by the driver; prefixes the failing stage and input.
class StageError : public Error {
 public:
  StageError(std::string stage, std::string input, const std::string& what)
      : Error(stage + " [" + input + "]: " + what),
        stage_(std::move(stage)),
        input_(std::move(input)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& input() const noexcept { return input_; }

 private:
  std::string stage_;
  std::string input_;
};

}  // namespace mczeno
