// Copyright 2026 The hpaqc Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hpaqc {

enum class ErrorKind {
  kInvalidArgument,
  kOutOfRange,
  kMissingVariable,
  kLimitExceeded,
  kConvergence,
  kVerification,
  kIo,
  kParse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception. The kind is surfaced verbatim in the CLI's
/// machine-readable error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hpaqc
