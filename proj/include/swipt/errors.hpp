// SPDX-License-Identifier: Apache-2.0
//
// swipt-ifc: transmit design for two-user MISO interference channels with
// energy harvesting receivers
// Copyright (C) 2026 The swipt-ifc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <cstddef>
#include <string>
#include <utility>

namespace swipt {

/// Malformed problem data: dimension mismatches, non-Hermitian input,
/// non-positive noise or power.
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerically degenerate input, e.g. a rank-deficient projector argument.
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested energy targets cannot be met by any admissible strategy.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance file. Line is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string field)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swipt
