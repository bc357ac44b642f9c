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

#include "hpaqc/hp_hamiltonian.hpp"

#include <string>

#include "hpaqc/error.hpp"

namespace hpaqc {
namespace {

// prod_r xnor(q_{f(i,axis)+r}, q_{f(j,axis)+r}) for r in [first_bit, n].
PseudoBoolean axis_equal(const LatticeInstance& in, int i, int j, int axis, int first_bit = 1) {
  PseudoBoolean out(1);
  for (int r = first_bit; r <= in.bits_per_axis(); ++r) {
    out *= xnor(in.variable(i, axis, r), in.variable(j, axis, r));
  }
  return out;
}

PseudoBoolean other_axes_equal(const LatticeInstance& in, int i, int j, int axis) {
  PseudoBoolean out(1);
  for (int k = 1; k <= in.dimension(); ++k) {
    if (k != axis) out *= axis_equal(in, i, j, k);
  }
  return out;
}

// Product q_{base+lo} ... q_{base+hi}; 1 when lo > hi.
PseudoBoolean bit_run(Var base, int lo, int hi) {
  Monomial vars;
  for (int u = lo; u <= hi; ++u) vars.push_back(base + u);
  return PseudoBoolean::term(std::move(vars));
}

void check_residue_pair(const LatticeInstance& in, int i, int j) {
  in.pointer(i, 1);
  in.pointer(j, 1);
  if (i == j) {
    throw Error(ErrorKind::kInvalidArgument,
                "residue pair must be distinct, got " + std::to_string(i) + " twice");
  }
}

}  // namespace

ContactMatrix::ContactMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "contact matrix must be square");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0) {
      throw Error(ErrorKind::kInvalidArgument, "contact matrix diagonal must be zero");
    }
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      const int g = entries_(i, j);
      if (g != 0 && g != 1) {
        throw Error(ErrorKind::kInvalidArgument, "contact matrix entries must be 0 or 1");
      }
      if (g != entries_(j, i)) {
        throw Error(ErrorKind::kInvalidArgument, "contact matrix must be symmetric");
      }
    }
  }
}

ContactMatrix ContactMatrix::from_sequence(const std::vector<Residue>& sequence) {
  const auto n = static_cast<Eigen::Index>(sequence.size());
  Matrix g = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 2; j < n; ++j) {
      if (sequence[static_cast<std::size_t>(i)] == Residue::kHydrophobic &&
          sequence[static_cast<std::size_t>(j)] == Residue::kHydrophobic) {
        g(i, j) = g(j, i) = 1;
      }
    }
  }
  return ContactMatrix(std::move(g));
}

void PenaltyWeights::validate() const {
  if (!(lambda0 > lambda1 && lambda1 > 0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "penalty weights must satisfy lambda0 > lambda1 > 0, got lambda0=" +
                    std::to_string(lambda0) + " lambda1=" + std::to_string(lambda1));
  }
}

PseudoBoolean build_onsite(const LatticeInstance& instance, const PenaltyWeights& weights) {
  weights.validate();
  PseudoBoolean sum;
  for (int i = 1; i < instance.length(); ++i) {
    for (int j = i + 1; j <= instance.length(); ++j) {
      PseudoBoolean coincide(1);
      for (int k = 1; k <= instance.dimension(); ++k) coincide *= axis_equal(instance, i, j, k);
      sum += coincide;
    }
  }
  return weights.lambda0 * sum;
}

PseudoBoolean build_onsite_with_fixed(const LatticeInstance& instance,
                                      const PenaltyWeights& weights) {
  weights.validate();
  const auto [first, second] = instance.fixed_residues();
  PseudoBoolean sum;
  for (int i = 1; i < instance.length(); ++i) {
    for (int j = i + 1; j <= instance.length(); ++j) {
      if (i == first && j == second) continue;
      PseudoBoolean coincide(1);
      for (int k = 1; k <= instance.dimension(); ++k) coincide *= axis_equal(instance, i, j, k);
      sum += coincide;
    }
  }
  return substitute_constants(weights.lambda0 * sum, fixed_bindings(instance).bindings);
}

PseudoBoolean distance_squared(const LatticeInstance& instance, int p, int q) {
  check_residue_pair(instance, p, q);
  PseudoBoolean total;
  for (int k = 1; k <= instance.dimension(); ++k) {
    PseudoBoolean diff;
    for (int r = 1; r <= instance.bits_per_axis(); ++r) {
      const Coeff weight = Coeff{1} << (r - 1);
      diff += weight * (var(instance.variable(p, k, r)) - var(instance.variable(q, k, r)));
    }
    total += diff * diff;
  }
  return total;
}

PseudoBoolean build_psc(const LatticeInstance& instance, const PenaltyWeights& weights) {
  weights.validate();
  PseudoBoolean sum(-(instance.length() - 1));
  for (int m = 1; m < instance.length(); ++m) sum += distance_squared(instance, m, m + 1);
  return weights.lambda1 * sum;
}

PseudoBoolean pairwise_direction_term(const LatticeInstance& instance, int i, int j, int axis,
                                      Direction direction) {
  check_residue_pair(instance, i, j);
  instance.pointer(i, axis);
  const int n = instance.bits_per_axis();
  const Var fi = instance.pointer(i, axis);
  const Var fj = instance.pointer(j, axis);

  // Residue i on an even coordinate, residue j on an odd one.
  PseudoBoolean term = (1 - var(fi + 1)) * var(fj + 1);

  if (direction == Direction::kPlus) {
    // j = i + 1: the remaining bits agree.
    term *= axis_equal(instance, i, j, axis, 2);
  } else if (n == 2) {
    // N = 4: i = 2 and j = 1 are the only even/odd pair differing in bit 2.
    term *= var(fi + 2) * boolean_xor(var(fj + 2), var(fi + 2));
  } else {
    // j + 1 = i, with j + 1 expanded through the increment circuit. The
    // factor [1 - prod(1 - q_i)] rules out i = 0, which also absorbs the
    // overflow of j = 11...1.
    PseudoBoolean i_is_zero(1);
    for (int k = 1; k <= n; ++k) i_is_zero *= 1 - var(fi + k);
    term *= 1 - i_is_zero;
    term *= boolean_xor(var(fj + 2), var(fi + 2));
    for (int r = 3; r <= n; ++r) {
      const PseudoBoolean carry_bit =
          var(fj + r) + bit_run(fj, 2, r - 1) - 2 * bit_run(fj, 2, r);
      term *= xnor(carry_bit, var(fi + r));
    }
  }
  return term * other_axes_equal(instance, i, j, axis);
}

PseudoBoolean pairwise_pair_term(const LatticeInstance& instance, int i, int j) {
  PseudoBoolean sum;
  for (int axis = 1; axis <= instance.dimension(); ++axis) {
    sum += pairwise_direction_term(instance, i, j, axis, Direction::kPlus);
    sum += pairwise_direction_term(instance, i, j, axis, Direction::kMinus);
  }
  return sum;
}

PseudoBoolean build_pairwise(const LatticeInstance& instance, const ContactMatrix& contacts) {
  if (contacts.size() != instance.length()) {
    throw Error(ErrorKind::kInvalidArgument, "contact matrix size does not match the sequence");
  }
  PseudoBoolean sum;
  for (int i = 1; i <= instance.length(); ++i) {
    for (int j = 1; j <= instance.length(); ++j) {
      if (contacts(i, j) != 0) sum += pairwise_pair_term(instance, i, j);
    }
  }
  return -sum;
}

std::vector<PseudoBoolean> build_adder_increment(std::span<const Var> bits) {
  if (bits.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "adder needs at least one input bit");
  }
  const int n = static_cast<int>(bits.size());
  auto x = [&](int k) { return var(bits[static_cast<std::size_t>(k - 1)]); };
  auto run = [&](int lo, int hi) {
    PseudoBoolean p(1);
    for (int u = lo; u <= hi; ++u) p *= x(u);
    return p;
  };

  std::vector<PseudoBoolean> z;
  z.reserve(static_cast<std::size_t>(n) + 1);
  z.emplace_back(0);
  if (n >= 2) z.push_back(1 - x(2));
  for (int k = 3; k <= n; ++k) z.push_back(x(k) + run(2, k - 1) - 2 * run(2, k));
  z.push_back(run(2, n));
  return z;
}

ProteinHamiltonian build_protein(const LatticeInstance& instance, const PenaltyWeights& weights,
                                 const ContactMatrix& contacts) {
  const auto bindings = fixed_bindings(instance).bindings;

  PseudoBoolean energy = build_onsite_with_fixed(instance, weights);
  energy += substitute_constants(build_psc(instance, weights), bindings);
  energy += substitute_constants(build_pairwise(instance, contacts), bindings);

  ProteinHamiltonian out;
  out.relabeling = free_relabeling(instance);
  out.energy = relabel(energy, out.relabeling);

  const auto [first, second] = instance.fixed_residues();
  for (int i = 1; i <= instance.length(); ++i) {
    if (i == first || i == second) continue;
    out.free_residues.push_back(i);
    std::vector<Var> block;
    for (Var v : instance.residue_variables(i)) block.push_back(out.relabeling.at(v));
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace hpaqc
