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

#include "hpaqc/lattice_encoding.hpp"

#include <bit>

#include "hpaqc/error.hpp"

namespace hpaqc {

std::vector<Residue> parse_sequence(std::string_view text) {
  std::vector<Residue> out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'H':
      case 'h':
        out.push_back(Residue::kHydrophobic);
        break;
      case 'P':
      case 'p':
        out.push_back(Residue::kPolar);
        break;
      default:
        throw Error(ErrorKind::kParse, std::string("residue must be H or P, got '") + c + "'");
    }
  }
  return out;
}

std::string sequence_to_string(const std::vector<Residue>& sequence) {
  std::string out;
  out.reserve(sequence.size());
  for (Residue r : sequence) out.push_back(static_cast<char>(r));
  return out;
}

LatticeInstance::LatticeInstance(std::vector<Residue> sequence, int dimension)
    : sequence_(std::move(sequence)), dimension_(dimension) {
  const auto n = sequence_.size();
  if (n < 4 || !std::has_single_bit(n)) {
    throw Error(ErrorKind::kInvalidArgument,
                "sequence length must be a power of two >= 4, got " + std::to_string(n));
  }
  if (dimension_ != 2 && dimension_ != 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "dimension must be 2 or 3, got " + std::to_string(dimension_));
  }
  bits_ = std::countr_zero(n);
}

LatticeInstance LatticeInstance::parse(std::string_view sequence, int dimension) {
  return LatticeInstance(parse_sequence(sequence), dimension);
}

bool LatticeInstance::hydrophobic(int residue) const {
  if (residue < 1 || residue > length()) {
    throw Error(ErrorKind::kOutOfRange, "residue index " + std::to_string(residue) +
                                            " outside 1.." + std::to_string(length()));
  }
  return sequence_[static_cast<std::size_t>(residue - 1)] == Residue::kHydrophobic;
}

Var LatticeInstance::pointer(int residue, int axis) const {
  if (residue < 1 || residue > length()) {
    throw Error(ErrorKind::kOutOfRange, "residue index " + std::to_string(residue) +
                                            " outside 1.." + std::to_string(length()));
  }
  if (axis < 1 || axis > dimension_) {
    throw Error(ErrorKind::kOutOfRange,
                "axis " + std::to_string(axis) + " outside 1.." + std::to_string(dimension_));
  }
  return dimension_ * (residue - 1) * bits_ + (axis - 1) * bits_;
}

std::vector<Var> LatticeInstance::residue_variables(int residue) const {
  std::vector<Var> vars;
  vars.reserve(static_cast<std::size_t>(bits_per_residue()));
  const Var first = pointer(residue, 1);
  for (int r = 1; r <= bits_per_residue(); ++r) vars.push_back(first + r);
  return vars;
}

Coordinates decode_coordinates(const Assignment& assignment, const LatticeInstance& instance) {
  if (assignment.size() != static_cast<std::size_t>(instance.total_vars())) {
    throw Error(ErrorKind::kInvalidArgument,
                "assignment has " + std::to_string(assignment.size()) + " bits, instance needs " +
                    std::to_string(instance.total_vars()));
  }
  Coordinates coords(instance.length(), instance.dimension());
  for (int i = 1; i <= instance.length(); ++i) {
    for (int k = 1; k <= instance.dimension(); ++k) {
      int value = 0;
      for (int r = 1; r <= instance.bits_per_axis(); ++r) {
        if (assignment.at(instance.variable(i, k, r))) value |= 1 << (r - 1);
      }
      coords(i - 1, k - 1) = value;
    }
  }
  return coords;
}

Assignment encode_coordinates(const Coordinates& coords, const LatticeInstance& instance) {
  if (coords.rows() != instance.length() || coords.cols() != instance.dimension()) {
    throw Error(ErrorKind::kInvalidArgument, "coordinate matrix shape does not match instance");
  }
  const int grid = instance.length();
  Assignment out(static_cast<std::size_t>(instance.total_vars()));
  for (int i = 1; i <= instance.length(); ++i) {
    for (int k = 1; k <= instance.dimension(); ++k) {
      const int value = coords(i - 1, k - 1);
      if (value < 0 || value >= grid) {
        throw Error(ErrorKind::kOutOfRange, "coordinate " + std::to_string(value) +
                                                " outside grid 0.." + std::to_string(grid - 1));
      }
      for (int r = 1; r <= instance.bits_per_axis(); ++r) {
        out.set(instance.variable(i, k, r), ((value >> (r - 1)) & 1) != 0);
      }
    }
  }
  return out;
}

FixedResidueBinding fixed_bindings(const LatticeInstance& instance) {
  const int centre = instance.length() / 2 - 1;
  const auto [first, second] = instance.fixed_residues();

  FixedResidueBinding out;
  out.sites = Coordinates::Constant(2, instance.dimension(), centre);
  out.sites(1, 0) = centre + 1;

  for (int row = 0; row < 2; ++row) {
    const int residue = row == 0 ? first : second;
    for (int k = 1; k <= instance.dimension(); ++k) {
      const int value = out.sites(row, k - 1);
      for (int r = 1; r <= instance.bits_per_axis(); ++r) {
        out.bindings.emplace(instance.variable(residue, k, r), ((value >> (r - 1)) & 1) != 0);
      }
    }
  }
  return out;
}

std::vector<Var> free_variables(const LatticeInstance& instance) {
  const auto [first, second] = instance.fixed_residues();
  std::vector<Var> out;
  out.reserve(static_cast<std::size_t>(instance.free_vars()));
  for (int i = 1; i <= instance.length(); ++i) {
    if (i == first || i == second) continue;
    for (Var v : instance.residue_variables(i)) out.push_back(v);
  }
  return out;
}

std::map<Var, Var> free_relabeling(const LatticeInstance& instance) {
  std::map<Var, Var> out;
  Var next = 1;
  for (Var v : free_variables(instance)) out.emplace(v, next++);
  return out;
}

Assignment expand_free_assignment(const Assignment& free, const LatticeInstance& instance) {
  if (free.size() != static_cast<std::size_t>(instance.free_vars())) {
    throw Error(ErrorKind::kInvalidArgument,
                "free assignment has " + std::to_string(free.size()) + " bits, expected " +
                    std::to_string(instance.free_vars()));
  }
  Assignment full(static_cast<std::size_t>(instance.total_vars()));
  for (const auto& [v, bit] : fixed_bindings(instance).bindings) full.set(v, bit);
  for (const auto& [original, relabelled] : free_relabeling(instance)) {
    full.set(original, free.at(relabelled));
  }
  return full;
}

}  // namespace hpaqc
