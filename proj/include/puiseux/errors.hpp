// Copyright 2026 The Puiseux Authors
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

#ifndef PUISEUX_ERRORS_HPP
#define PUISEUX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace puiseux {

enum class ErrorKind {
  NotCofinite,
  NotClosed,
  NotAMonoid,
  NotAtomic,
  NotMember,
  InsufficientCoefficient,
  MixedResidues,
  BudgetExceeded,
  Overflow,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by library operations. The kind is stable and is what
/// the CLI maps onto exit codes and JSON error records.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse error carrying the zero-based offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace puiseux

#endif  // PUISEUX_ERRORS_HPP
