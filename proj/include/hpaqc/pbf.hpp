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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hpaqc {

/// 1-based index of a binary variable q_i.
using Var = std::int32_t;
using Coeff = std::int64_t;

/// Sorted, duplicate-free list of variable indices. The empty monomial is the
/// constant term.
using Monomial = std::vector<Var>;

/// Orders monomials by cardinality, then lexicographically. This is the
/// iteration and serialization order of every term map.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Values for q_1 ... q_n. Index 0 is unused so that bits line up with the
/// 1-based variable convention.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n_vars) : bits_(n_vars + 1, 0) {}

  /// Bit i-1 of mask holds q_i.
  static Assignment from_mask(std::uint64_t mask, std::size_t n_vars);

  /// Parses the display order used for bit strings: leftmost character is
  /// q_n, rightmost is q_1. Spaces are ignored.
  static Assignment from_display(std::string_view text);

  std::size_t size() const noexcept { return bits_.empty() ? 0 : bits_.size() - 1; }
  bool contains(Var i) const noexcept {
    return i >= 1 && static_cast<std::size_t>(i) < bits_.size();
  }

  /// Throws Error(kMissingVariable) naming i when i is outside 1..size().
  bool at(Var i) const;
  void set(Var i, bool value);

  /// Requires size() <= 64.
  std::uint64_t to_mask() const;
  std::string to_display() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Multilinear polynomial over binary variables with exact integer
/// coefficients, kept in canonical form: every key is a sorted set of
/// distinct indices and no stored coefficient is zero.
class PseudoBoolean {
 public:
  using TermMap = std::map<Monomial, Coeff, MonomialOrder>;

  PseudoBoolean() = default;
  PseudoBoolean(Coeff constant);  // NOLINT(google-explicit-constructor)

  static PseudoBoolean variable(Var i);
  /// Sorts and deduplicates vars (q_i^2 = q_i).
  static PseudoBoolean term(Monomial vars, Coeff coeff = 1);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Monomial& vars) const;
  Coeff constant_term() const { return coefficient({}); }

  /// Sorted list of variables with at least one nonzero term.
  std::vector<Var> support() const;
  /// Largest variable index mentioned, 0 for a constant.
  Var max_var() const;

  /// Adds coeff * prod(vars) in place; vars must already be canonical.
  void accumulate(Monomial vars, Coeff coeff);

  PseudoBoolean& operator+=(const PseudoBoolean& other);
  PseudoBoolean& operator-=(const PseudoBoolean& other);
  PseudoBoolean& operator*=(const PseudoBoolean& other);
  PseudoBoolean& operator*=(Coeff scale);

  friend PseudoBoolean operator+(PseudoBoolean f, const PseudoBoolean& g) { return f += g; }
  friend PseudoBoolean operator-(PseudoBoolean f, const PseudoBoolean& g) { return f -= g; }
  friend PseudoBoolean operator*(const PseudoBoolean& f, const PseudoBoolean& g);
  friend PseudoBoolean operator*(PseudoBoolean f, Coeff c) { return f *= c; }
  friend PseudoBoolean operator*(Coeff c, PseudoBoolean f) { return f *= c; }
  friend PseudoBoolean operator-(PseudoBoolean f) { return f *= -1; }

  friend bool operator==(const PseudoBoolean&, const PseudoBoolean&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

PseudoBoolean add(const PseudoBoolean& f, const PseudoBoolean& g);
PseudoBoolean mul(const PseudoBoolean& f, const PseudoBoolean& g);

inline PseudoBoolean var(Var i) { return PseudoBoolean::variable(i); }

PseudoBoolean boolean_not(const PseudoBoolean& f);
PseudoBoolean boolean_and(const PseudoBoolean& f, const PseudoBoolean& g);
PseudoBoolean boolean_or(const PseudoBoolean& f, const PseudoBoolean& g);
/// Logical equality 1 - f - g + 2fg, for f and g that are 0/1-valued.
PseudoBoolean xnor(const PseudoBoolean& f, const PseudoBoolean& g);
/// 1 - q_i - q_j + 2 q_i q_j. Throws for i == j.
PseudoBoolean xnor(Var i, Var j);
/// f + g - 2fg.
PseudoBoolean boolean_xor(const PseudoBoolean& f, const PseudoBoolean& g);

/// Product of a list of factors; the empty product is 1.
PseudoBoolean product(std::span<const PseudoBoolean> factors);

Coeff evaluate(const PseudoBoolean& f, const Assignment& assignment);

/// Fixes the bound variables to constants. Indices absent from f are ignored.
PseudoBoolean substitute_constants(const PseudoBoolean& f, const std::map<Var, bool>& bindings);

/// Renames variables; indices not in the mapping keep their number. The
/// resulting map must be injective on the support of f.
PseudoBoolean relabel(const PseudoBoolean& f, const std::map<Var, Var>& mapping);

int degree(const PseudoBoolean& f);

/// Number of nonzero terms per locality k (k = 0 is the constant).
std::map<int, std::size_t> term_census(const PseudoBoolean& f);

/// Fast repeated evaluation on 64-bit masks (bit i-1 is q_i).
class MaskEvaluator {
 public:
  explicit MaskEvaluator(const PseudoBoolean& f);
  Coeff operator()(std::uint64_t mask) const noexcept;

 private:
  std::vector<std::pair<std::uint64_t, Coeff>> terms_;
};

/// Values of f on all 2^n_vars assignments, indexed by mask, computed with a
/// subset-sum (zeta) transform of the coefficient table. Requires every
/// variable of f to be <= n_vars and n_vars <= 30.
std::vector<Coeff> value_table(const PseudoBoolean& f, int n_vars);

}  // namespace hpaqc
