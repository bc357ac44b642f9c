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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hpaqc/hp_hamiltonian.hpp"
#include "hpaqc/lattice_encoding.hpp"

namespace hpaqc {

/// Closed-form number of k-local terms of the pinned protein Hamiltonian, for
/// k = 0 ... 2 D log2 N. These count every monomial that touches at most two
/// free residues.
std::map<int, std::int64_t> table1_counts(int length, int dimension);

struct LocalityDeviation {
  int k = 0;
  std::int64_t bound = 0;
  std::int64_t actual = 0;
  /// Predicted monomials absent from the expansion (first few only).
  std::vector<Monomial> missing;
  /// Monomials spanning three or more residues (first few only).
  std::vector<Monomial> unexpected;
};

struct ResourceReport {
  std::map<int, std::int64_t> per_locality_bound;
  std::map<int, std::int64_t> per_locality_actual;
  std::int64_t free_qubits = 0;
  std::int64_t ancilla_qubits = 0;
  std::int64_t total_qubits = 0;
  /// Ancillas used by quadratize() with per-residue blocks, when requested.
  std::optional<std::int64_t> empirical_ancillas;
  std::vector<LocalityDeviation> deviations;

  bool within_bound() const;
};

struct ResourceOptions {
  bool run_quadratizer = false;
  std::size_t max_listed_monomials = 16;
};

ResourceReport resource_report(const LatticeInstance& instance, const ProteinHamiltonian& built,
                               const ResourceOptions& options = {});

inline ResourceReport resource_report(const LatticeInstance& instance,
                                      const ResourceOptions& options = {}) {
  return resource_report(instance, build_protein(instance), options);
}

}  // namespace hpaqc
