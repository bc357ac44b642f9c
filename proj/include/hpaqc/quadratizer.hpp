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
#include <string>
#include <vector>

#include "hpaqc/pbf.hpp"

namespace hpaqc {

/// Record of one product replacement q_a q_b -> q_ancilla.
struct Substitution {
  Var a = 0;
  Var b = 0;
  Var ancilla = 0;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct QuadratizationResult {
  PseudoBoolean reduced;
  std::vector<Substitution> substitutions;
  Coeff delta = 0;
  int original_vars = 0;
  int total_vars = 0;

  /// Extends an assignment of the original variables with the consistent
  /// ancilla values (ancilla = a AND b, in ledger order).
  Assignment extend(const Assignment& original) const;
};

/// delta * (3 anc + a b - 2 a anc - 2 b anc): zero iff anc = a AND b.
PseudoBoolean and_gadget(Var a, Var b, Var anc, Coeff delta);

struct QuadratizeOptions {
  /// Penalty weight; computed from f when absent.
  std::optional<Coeff> delta;
  /// Number of original variables; defaults to f.max_var(). Ancillas are
  /// numbered from original_vars + 1.
  std::optional<int> original_vars;
  /// Optional partition of variables into blocks (for example one block per
  /// residue). Each block's products are replaced first, by one ancilla per
  /// needed subset built up in order of increasing size.
  std::vector<std::vector<Var>> blocks;
};

/// Rewrites f as a degree <= 2 polynomial over original + ancilla variables
/// with one AND gadget per substitution. Without blocks (or for what remains
/// after the block pass) the most frequent pair inside monomials of degree >= 3
/// is replaced first, ties going to the lowest index pair.
///
/// The default delta is the larger of 1 + max|f| (exhaustive for <= 20
/// variables, otherwise 1 + sum|c|) and max f minus a lower bound of the
/// non-gadget part of the reduced polynomial. The second term guarantees that
/// any assignment violating a gadget scores at least max f.
QuadratizationResult quadratize(const PseudoBoolean& f, const QuadratizeOptions& options = {});

struct ReductionCounterexample {
  std::string original;  // display order, q_n ... q_1
  std::string extended;  // display order over all variables
  Coeff expected = 0;
  Coeff actual = 0;
  std::string reason;
};

struct ReductionReport {
  bool passed = false;
  /// True when every ancilla assignment was enumerated.
  bool exhaustive = false;
  std::uint64_t checked_states = 0;
  /// Consistent extensions reproduce f exactly.
  bool consistent_match = false;
  /// Minimum over ancilla assignments equals f for every original state.
  bool minimum_preserved = false;
  /// Sorted consistent values equal sorted values of f.
  bool multiset_match = false;
  Coeff min_original = 0;
  Coeff max_original = 0;
  /// Lowest value over assignments violating at least one gadget.
  std::optional<Coeff> min_penalized;
  std::optional<ReductionCounterexample> counterexample;
};

struct VerifyOptions {
  /// Ancilla samples per original state when exhaustive checking is too big.
  int samples_per_state = 64;
  std::uint64_t seed = 12345;
  /// Exhaustive when original_vars + ancillas <= this.
  int exhaustive_limit = 22;
};

/// Checks the reduction against f on every original assignment (f must have
/// at most 20 variables).
ReductionReport verify_reduction(const PseudoBoolean& f, const QuadratizationResult& result,
                                 const VerifyOptions& options = {});

/// Ancillas for the per-residue all-subsets scheme: (N-2)(N^D - D log2 N - 1).
std::int64_t count_ancillas_protein(int length, int dimension);
/// (N-2)(N^D - 1).
std::int64_t total_qubits_2local(int length, int dimension);

}  // namespace hpaqc
