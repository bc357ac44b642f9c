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

#include "hpaqc/pbf.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "hpaqc/error.hpp"

namespace hpaqc {
namespace {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOutOfRange, "coefficient overflow in addition");
  }
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOutOfRange, "coefficient overflow in multiplication");
  }
  return out;
}

void check_index(Var i) {
  if (i < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "variable indices are 1-based, got " + std::to_string(i));
  }
}

}  // namespace

// --- Assignment -------------------------------------------------------------

Assignment Assignment::from_mask(std::uint64_t mask, std::size_t n_vars) {
  Assignment a(n_vars);
  for (std::size_t i = 1; i <= n_vars && i <= 64; ++i) {
    a.bits_[i] = static_cast<std::uint8_t>((mask >> (i - 1)) & 1u);
  }
  return a;
}

Assignment Assignment::from_display(std::string_view text) {
  std::vector<std::uint8_t> msb_first;
  for (char c : text) {
    if (c == ' ' || c == '_') continue;
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::kParse, std::string("invalid bit character '") + c + "'");
    }
    msb_first.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  Assignment a(msb_first.size());
  const std::size_t n = msb_first.size();
  for (std::size_t k = 0; k < n; ++k) a.bits_[n - k] = msb_first[k];
  return a;
}

bool Assignment::at(Var i) const {
  if (!contains(i)) {
    throw Error(ErrorKind::kMissingVariable,
                "assignment has no value for variable q" + std::to_string(i));
  }
  return bits_[static_cast<std::size_t>(i)] != 0;
}

void Assignment::set(Var i, bool value) {
  if (!contains(i)) {
    throw Error(ErrorKind::kOutOfRange,
                "variable q" + std::to_string(i) + " outside assignment of size " +
                    std::to_string(size()));
  }
  bits_[static_cast<std::size_t>(i)] = value ? 1 : 0;
}

std::uint64_t Assignment::to_mask() const {
  if (size() > 64) {
    throw Error(ErrorKind::kLimitExceeded, "assignment longer than 64 bits");
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i <= size(); ++i) {
    if (bits_[i]) mask |= std::uint64_t{1} << (i - 1);
  }
  return mask;
}

std::string Assignment::to_display() const {
  std::string out;
  out.reserve(size());
  for (std::size_t i = size(); i >= 1; --i) out.push_back(bits_[i] ? '1' : '0');
  return out;
}

// --- PseudoBoolean ----------------------------------------------------------

PseudoBoolean::PseudoBoolean(Coeff constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

PseudoBoolean PseudoBoolean::variable(Var i) {
  check_index(i);
  PseudoBoolean f;
  f.terms_.emplace(Monomial{i}, 1);
  return f;
}

PseudoBoolean PseudoBoolean::term(Monomial vars, Coeff coeff) {
  for (Var v : vars) check_index(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  PseudoBoolean f;
  f.accumulate(std::move(vars), coeff);
  return f;
}

Coeff PseudoBoolean::coefficient(const Monomial& vars) const {
  const auto it = terms_.find(vars);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<Var> PseudoBoolean::support() const {
  std::set<Var> vars;
  for (const auto& [key, c] : terms_) vars.insert(key.begin(), key.end());
  return {vars.begin(), vars.end()};
}

Var PseudoBoolean::max_var() const {
  Var m = 0;
  for (const auto& [key, c] : terms_) {
    if (!key.empty()) m = std::max(m, key.back());
  }
  return m;
}

void PseudoBoolean::accumulate(Monomial vars, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(vars), coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

PseudoBoolean& PseudoBoolean::operator+=(const PseudoBoolean& other) {
  for (const auto& [key, c] : other.terms_) accumulate(key, c);
  return *this;
}

PseudoBoolean& PseudoBoolean::operator-=(const PseudoBoolean& other) {
  for (const auto& [key, c] : other.terms_) accumulate(key, checked_mul(c, -1));
  return *this;
}

PseudoBoolean& PseudoBoolean::operator*=(const PseudoBoolean& other) {
  *this = *this * other;
  return *this;
}

PseudoBoolean& PseudoBoolean::operator*=(Coeff scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c = checked_mul(c, scale);
  return *this;
}

PseudoBoolean operator*(const PseudoBoolean& f, const PseudoBoolean& g) {
  PseudoBoolean out;
  Monomial joined;
  for (const auto& [a, ca] : f.terms_) {
    for (const auto& [b, cb] : g.terms_) {
      joined.clear();
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(joined));
      out.accumulate(joined, checked_mul(ca, cb));
    }
  }
  return out;
}

std::string PseudoBoolean::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Coeff mag = c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag < 0) mag = -mag;
    first = false;
    if (key.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    for (std::size_t k = 0; k < key.size(); ++k) {
      if (k) os << "*";
      os << "q" << key[k];
    }
  }
  return os.str();
}

// --- free functions ---------------------------------------------------------

PseudoBoolean add(const PseudoBoolean& f, const PseudoBoolean& g) { return f + g; }
PseudoBoolean mul(const PseudoBoolean& f, const PseudoBoolean& g) { return f * g; }

PseudoBoolean boolean_not(const PseudoBoolean& f) { return PseudoBoolean(1) - f; }
PseudoBoolean boolean_and(const PseudoBoolean& f, const PseudoBoolean& g) { return f * g; }
PseudoBoolean boolean_or(const PseudoBoolean& f, const PseudoBoolean& g) {
  return f + g - f * g;
}

PseudoBoolean xnor(const PseudoBoolean& f, const PseudoBoolean& g) {
  return PseudoBoolean(1) - f - g + 2 * (f * g);
}

PseudoBoolean xnor(Var i, Var j) {
  if (i == j) {
    throw Error(ErrorKind::kInvalidArgument,
                "xnor of q" + std::to_string(i) + " with itself is constant 1");
  }
  return xnor(var(i), var(j));
}

PseudoBoolean boolean_xor(const PseudoBoolean& f, const PseudoBoolean& g) {
  return f + g - 2 * (f * g);
}

PseudoBoolean product(std::span<const PseudoBoolean> factors) {
  PseudoBoolean out(1);
  for (const auto& factor : factors) {
    out = out * factor;
    if (out.is_zero()) break;
  }
  return out;
}

Coeff evaluate(const PseudoBoolean& f, const Assignment& assignment) {
  Coeff total = 0;
  for (const auto& [key, c] : f.terms()) {
    bool on = true;
    for (Var v : key) {
      if (!assignment.at(v)) {
        on = false;
        break;
      }
    }
    if (on) total = checked_add(total, c);
  }
  return total;
}

PseudoBoolean substitute_constants(const PseudoBoolean& f, const std::map<Var, bool>& bindings) {
  PseudoBoolean out;
  Monomial kept;
  for (const auto& [key, c] : f.terms()) {
    kept.clear();
    bool zero = false;
    for (Var v : key) {
      const auto it = bindings.find(v);
      if (it == bindings.end()) {
        kept.push_back(v);
      } else if (!it->second) {
        zero = true;
        break;
      }
    }
    if (!zero) out.accumulate(kept, c);
  }
  return out;
}

PseudoBoolean relabel(const PseudoBoolean& f, const std::map<Var, Var>& mapping) {
  std::map<Var, Var> image_of;
  std::map<Var, Var> preimage_of;
  for (Var v : f.support()) {
    const auto it = mapping.find(v);
    const Var target = it == mapping.end() ? v : it->second;
    check_index(target);
    const auto [pos, inserted] = preimage_of.emplace(target, v);
    if (!inserted) {
      throw Error(ErrorKind::kInvalidArgument,
                  "relabel maps both q" + std::to_string(pos->second) + " and q" +
                      std::to_string(v) + " to q" + std::to_string(target));
    }
    image_of.emplace(v, target);
  }

  PseudoBoolean out;
  for (const auto& [key, c] : f.terms()) {
    Monomial renamed;
    renamed.reserve(key.size());
    for (Var v : key) renamed.push_back(image_of.at(v));
    std::sort(renamed.begin(), renamed.end());
    out.accumulate(std::move(renamed), c);
  }
  return out;
}

int degree(const PseudoBoolean& f) {
  // Terms are ordered by cardinality, so the last one has the largest key.
  return f.is_zero() ? 0 : static_cast<int>(f.terms().rbegin()->first.size());
}

std::map<int, std::size_t> term_census(const PseudoBoolean& f) {
  std::map<int, std::size_t> census;
  for (const auto& [key, c] : f.terms()) ++census[static_cast<int>(key.size())];
  return census;
}

MaskEvaluator::MaskEvaluator(const PseudoBoolean& f) {
  if (f.max_var() > 64) {
    throw Error(ErrorKind::kLimitExceeded, "mask evaluation supports at most 64 variables");
  }
  terms_.reserve(f.size());
  for (const auto& [key, c] : f.terms()) {
    std::uint64_t mask = 0;
    for (Var v : key) mask |= std::uint64_t{1} << (v - 1);
    terms_.emplace_back(mask, c);
  }
}

Coeff MaskEvaluator::operator()(std::uint64_t mask) const noexcept {
  Coeff total = 0;
  for (const auto& [m, c] : terms_) {
    if ((mask & m) == m) total += c;
  }
  return total;
}

std::vector<Coeff> value_table(const PseudoBoolean& f, int n_vars) {
  if (n_vars < 0 || n_vars > 30) {
    throw Error(ErrorKind::kLimitExceeded, "value table supports 0..30 variables");
  }
  if (f.max_var() > n_vars) {
    throw Error(ErrorKind::kOutOfRange,
                "polynomial mentions q" + std::to_string(f.max_var()) + " beyond " +
                    std::to_string(n_vars) + " variables");
  }
  const std::size_t size = std::size_t{1} << n_vars;
  std::vector<Coeff> table(size, 0);
  for (const auto& [key, c] : f.terms()) {
    std::size_t mask = 0;
    for (Var v : key) mask |= std::size_t{1} << (v - 1);
    table[mask] += c;
  }
  for (int bit = 0; bit < n_vars; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & b) table[mask] = checked_add(table[mask], table[mask ^ b]);
    }
  }
  return table;
}

}  // namespace hpaqc
