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

#include "hpaqc/adiabatic_sim.hpp"

#include <cstdio>

namespace hpaqc {
namespace detail {

std::string format_s(double s) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", s);
  return buffer;
}

}  // namespace detail

template class SpinHamiltonian<double>;
template class JacobiEigenSolver<Eigen::MatrixXd>;
template SpinHamiltonian<double> to_spin_hamiltonian<double>(const PseudoBoolean&, int);
template SpectrumTrace<double> spectrum_trace<double>(const SpinHamiltonian<double>&,
                                                      const SpectrumOptions&);

}  // namespace hpaqc
