// Copyright 2026 The pirlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
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

namespace pirlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied parameters: graph sizes, setting parameters, theta,
// field modulus. The CLI maps every ParameterError to exit status 2.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class RangeError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class KindMismatchError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// A plan or answer broke one of the scheme invariants. These indicate a
// defect in a planner, never bad user input.
class PlanError : public Error {
 public:
  using Error::Error;
};

class LocalityError : public PlanError {
 public:
  using PlanError::PlanError;
};

class WireError : public Error {
 public:
  WireError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Malformed canonical text (linear combinations, query payloads).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class SessionError : public Error {
 public:
  using Error::Error;
};

}  // namespace pirlab
