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
#include <optional>
#include <vector>

#include "hpaqc/lattice_encoding.hpp"
#include "hpaqc/pbf.hpp"

namespace hpaqc {

/// Lattice positions of a chain, one row per residue.
using Conformation = Coordinates;

struct MinimumResult {
  Coeff value = 0;
  /// Every minimizing assignment, ascending by mask.
  std::vector<Assignment> minimizers;
};

/// Exhaustive minimum of f over n_vars variables (default f.max_var(),
/// at most 24). Evaluates each assignment term by term.
MinimumResult brute_force_minimum(const PseudoBoolean& f, std::optional<int> n_vars = {});

/// Self-avoiding with unit L1 steps between consecutive residues.
bool is_valid_conformation(const Conformation& conformation);

/// Number of H-H pairs with |i - j| >= 2 at lattice distance 1.
int count_hh_contacts(const Conformation& conformation, const std::vector<Residue>& sequence);

/// Classical HP energy, -(number of topological H-H contacts). Throws for an
/// invalid conformation or a length mismatch.
int hp_energy(const Conformation& conformation, const std::vector<Residue>& sequence);

struct EnumerateOptions {
  /// Allows 16 < N <= 24.
  bool long_run = false;
  /// Fix the first step and the first turn (and in 3D the first out-of-plane
  /// step), multiplying counts back.
  bool use_symmetry = true;
  /// Prune branches whose best reachable energy is above the incumbent.
  bool prune = true;
};

struct NativeResult {
  int min_energy = 0;
  /// Number of self-avoiding walks starting at the origin with min_energy.
  std::uint64_t degeneracy = 0;
  Conformation witness;
  std::uint64_t nodes_visited = 0;
};

constexpr int kDefaultWalkLimit = 16;
constexpr int kLongRunWalkLimit = 24;

/// Exact HP ground state by depth-first enumeration of self-avoiding walks.
NativeResult enumerate_native(const std::vector<Residue>& sequence, int dimension,
                              const EnumerateOptions& options = {});

}  // namespace hpaqc
