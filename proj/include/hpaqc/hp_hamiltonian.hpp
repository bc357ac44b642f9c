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

#include <Eigen/Core>
#include <map>
#include <span>
#include <vector>

#include "hpaqc/lattice_encoding.hpp"
#include "hpaqc/pbf.hpp"

namespace hpaqc {

/// Symmetric 0/1 interaction matrix with a zero diagonal.
class ContactMatrix {
 public:
  using Matrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

  explicit ContactMatrix(Matrix entries);

  /// G_ij = 1 iff residues i and j are both H and |i - j| >= 2.
  static ContactMatrix from_sequence(const std::vector<Residue>& sequence);

  int size() const noexcept { return static_cast<int>(entries_.rows()); }
  /// 1-based access.
  int operator()(int i, int j) const { return entries_(i - 1, j - 1); }
  const Matrix& entries() const noexcept { return entries_; }

 private:
  Matrix entries_;
};

struct PenaltyWeights {
  Coeff lambda0 = 5;
  Coeff lambda1 = 4;

  /// lambda1 = N, lambda0 = N + 1.
  static PenaltyWeights defaults(int length) { return {length + 1, length}; }
  /// Throws unless lambda0 > lambda1 > 0.
  void validate() const;
};

/// lambda0 * sum_{i<j} prod_{k,r} xnor(q_{f(i,k)+r}, q_{f(j,k)+r}).
PseudoBoolean build_onsite(const LatticeInstance& instance, const PenaltyWeights& weights);

/// build_onsite without the pinned pair's term, with the pinned residues
/// substituted.
PseudoBoolean build_onsite_with_fixed(const LatticeInstance& instance,
                                      const PenaltyWeights& weights);

/// Squared Euclidean distance between residues p and q; always 2-local.
PseudoBoolean distance_squared(const LatticeInstance& instance, int p, int q);

/// lambda1 * (-(N - 1) + sum_m d^2_{m,m+1}) over the full variable set.
PseudoBoolean build_psc(const LatticeInstance& instance, const PenaltyWeights& weights);

enum class Direction { kPlus, kMinus };

/// Indicator that residue j sits one step from residue i along `axis`
/// (kPlus: j = i + 1, kMinus: j = i - 1), gated on residue i having an even
/// coordinate on that axis so each contact is counted once in the double sum.
/// N = 4 uses the closed N = 4 forms; larger N use the adder-based forms.
PseudoBoolean pairwise_direction_term(const LatticeInstance& instance, int i, int j, int axis,
                                      Direction direction);

/// Sum of the directional indicators over every axis for the ordered pair (i, j).
PseudoBoolean pairwise_pair_term(const LatticeInstance& instance, int i, int j);

/// -sum_{i,j} G_ij H^{ij} over the full variable set.
PseudoBoolean build_pairwise(const LatticeInstance& instance, const ContactMatrix& contacts);

/// Bits z_1 ... z_{n+1} of x + 1 for an odd n-bit input x given LSB-first.
/// z_1 is always 0; the result is only meaningful when x_1 = 1.
std::vector<PseudoBoolean> build_adder_increment(std::span<const Var> bits);

struct ProteinHamiltonian {
  /// Energy over the free variables, renumbered 1..instance.free_vars().
  PseudoBoolean energy;
  /// Free residues (1-based) in variable order.
  std::vector<int> free_residues;
  /// Renumbered variables owned by each free residue, parallel to free_residues.
  std::vector<std::vector<Var>> blocks;
  /// Original index -> renumbered index for every free variable.
  std::map<Var, Var> relabeling;
};

/// H_onsite + H_psc + H_pairwise with the middle residues pinned and the free
/// variables renumbered contiguously.
ProteinHamiltonian build_protein(const LatticeInstance& instance, const PenaltyWeights& weights,
                                 const ContactMatrix& contacts);

inline ProteinHamiltonian build_protein(const LatticeInstance& instance) {
  return build_protein(instance, PenaltyWeights::defaults(instance.length()),
                       ContactMatrix::from_sequence(instance.sequence()));
}

}  // namespace hpaqc
