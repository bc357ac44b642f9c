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

#include "hpaqc/error.hpp"

namespace hpaqc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid_argument";
    case ErrorKind::kOutOfRange:
      return "out_of_range";
    case ErrorKind::kMissingVariable:
      return "missing_variable";
    case ErrorKind::kLimitExceeded:
      return "limit_exceeded";
    case ErrorKind::kConvergence:
      return "convergence";
    case ErrorKind::kVerification:
      return "verification";
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kParse:
      return "parse";
  }
  return "unknown";
}

}  // namespace hpaqc
