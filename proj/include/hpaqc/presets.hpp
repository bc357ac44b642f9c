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

#include <string_view>

#include "hpaqc/pbf.hpp"

namespace hpaqc {

/// 1 + q1 - q2 + q3 + q4 - q1 q2 q3 + q1 q2 q3 q4, the four-variable toy
/// function with unique minimum at q4 q3 q2 q1 = 0010.
inline PseudoBoolean toy_hamiltonian() {
  PseudoBoolean f = 1;
  f += var(1) - var(2) + var(3) + var(4);
  f += PseudoBoolean::term({1, 2, 3}, -1);
  f += PseudoBoolean::term({1, 2, 3, 4}, 1);
  return f;
}

/// Throws Error(kInvalidArgument) for unknown names.
PseudoBoolean load_preset(std::string_view name);

}  // namespace hpaqc
