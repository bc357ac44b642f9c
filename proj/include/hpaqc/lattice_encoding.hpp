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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hpaqc/pbf.hpp"

namespace hpaqc {

enum class Residue : char { kHydrophobic = 'H', kPolar = 'P' };

std::vector<Residue> parse_sequence(std::string_view text);
std::string sequence_to_string(const std::vector<Residue>& sequence);

/// One row per residue, one column per axis (x, y[, z]).
using Coordinates = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// HP chain of length N = 2^M (N >= 4) on an N^D grid. Each residue owns
/// D*log2(N) consecutive variables; within one axis field the first variable
/// is the least significant bit.
class LatticeInstance {
 public:
  LatticeInstance(std::vector<Residue> sequence, int dimension);
  static LatticeInstance parse(std::string_view sequence, int dimension);

  int length() const noexcept { return static_cast<int>(sequence_.size()); }
  int dimension() const noexcept { return dimension_; }
  int bits_per_axis() const noexcept { return bits_; }
  int bits_per_residue() const noexcept { return dimension_ * bits_; }
  int total_vars() const noexcept { return length() * bits_per_residue(); }
  /// Free variables once the two middle residues are pinned.
  int free_vars() const noexcept { return (length() - 2) * bits_per_residue(); }

  const std::vector<Residue>& sequence() const noexcept { return sequence_; }
  bool hydrophobic(int residue) const;

  /// The two pinned residues (N/2, N/2 + 1), 1-based.
  std::pair<int, int> fixed_residues() const noexcept {
    return {length() / 2, length() / 2 + 1};
  }

  /// Offset f(i, k) = D(i-1)log2N + (k-1)log2N; residue and axis are 1-based.
  Var pointer(int residue, int axis) const;
  /// q_{f(i,k)+r}; r is 1-based with r = 1 the least significant bit.
  Var variable(int residue, int axis, int bit) const { return pointer(residue, axis) + bit; }
  std::vector<Var> residue_variables(int residue) const;

 private:
  std::vector<Residue> sequence_;
  int dimension_ = 2;
  int bits_ = 2;
};

inline Var f_pointer(int residue, int axis, const LatticeInstance& instance) {
  return instance.pointer(residue, axis);
}

/// Requires assignment.size() == instance.total_vars().
Coordinates decode_coordinates(const Assignment& assignment, const LatticeInstance& instance);
Assignment encode_coordinates(const Coordinates& coords, const LatticeInstance& instance);

struct FixedResidueBinding {
  std::map<Var, bool> bindings;
  /// Grid sites of residues N/2 and N/2+1 (two rows).
  Coordinates sites;
};

/// Residue N/2 sits on the (N/2)-th grid point of every axis (coordinate
/// N/2 - 1 counting from 0); residue N/2+1 is one step further along x.
FixedResidueBinding fixed_bindings(const LatticeInstance& instance);

/// Original indices of the unpinned variables, ascending.
std::vector<Var> free_variables(const LatticeInstance& instance);
/// Maps each free original index to its position 1..free_vars().
std::map<Var, Var> free_relabeling(const LatticeInstance& instance);
/// Lifts an assignment of the contiguous free variables to a full bit string
/// with the pinned residues filled in.
Assignment expand_free_assignment(const Assignment& free, const LatticeInstance& instance);

}  // namespace hpaqc
