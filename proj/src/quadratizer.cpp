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

#include "hpaqc/quadratizer.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "hpaqc/error.hpp"

namespace hpaqc {
namespace {

constexpr int kExhaustiveDeltaLimit = 20;

class Ledger {
 public:
  explicit Ledger(Var first_ancilla) : next_(first_ancilla) {}

  Var and_of(Var a, Var b) {
    if (a > b) std::swap(a, b);
    const auto [it, inserted] = pairs_.try_emplace({a, b}, next_);
    if (inserted) {
      subs_.push_back({a, b, next_});
      ++next_;
    }
    return it->second;
  }

  std::vector<Substitution>& substitutions() { return subs_; }
  Var next() const { return next_; }

 private:
  Var next_;
  std::map<std::pair<Var, Var>, Var> pairs_;
  std::vector<Substitution> subs_;
};

struct WorkingTerm {
  Monomial vars;
  Coeff coeff;
};

void replace_pair(Monomial& vars, Var a, Var b, Var anc) {
  std::erase_if(vars, [&](Var v) { return v == a || v == b; });
  vars.insert(std::upper_bound(vars.begin(), vars.end(), anc), anc);
}

bool has_both(const Monomial& vars, Var a, Var b) {
  return std::binary_search(vars.begin(), vars.end(), a) &&
         std::binary_search(vars.begin(), vars.end(), b);
}

// Replaces every block cluster of size >= 2 inside monomials of degree >= 3
// by a single ancilla. Subset ancillas are chained (S = S' AND last) and
// created per block in order of increasing size.
void block_pass(std::vector<WorkingTerm>& work, const std::vector<std::vector<Var>>& blocks,
                Ledger& ledger) {
  std::map<Var, std::size_t> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Var v : blocks[b]) {
      if (!block_of.emplace(v, b).second) {
        throw Error(ErrorKind::kInvalidArgument,
                    "variable q" + std::to_string(v) + " appears in two blocks");
      }
    }
  }

  auto clusters_of = [&](const Monomial& vars) {
    std::map<std::size_t, Monomial> clusters;
    for (Var v : vars) {
      const auto it = block_of.find(v);
      if (it != block_of.end()) clusters[it->second].push_back(v);
    }
    return clusters;
  };

  struct SubsetKey {
    std::size_t block;
    Monomial vars;
    bool operator<(const SubsetKey& o) const {
      if (block != o.block) return block < o.block;
      return MonomialOrder{}(vars, o.vars);
    }
  };
  std::set<SubsetKey> needed;
  for (const auto& term : work) {
    if (term.vars.size() < 3) continue;
    for (auto& [block, cluster] : clusters_of(term.vars)) {
      for (std::size_t len = 2; len <= cluster.size(); ++len) {
        needed.insert({block, Monomial(cluster.begin(), cluster.begin() + len)});
      }
    }
  }

  std::map<Monomial, Var> subset_var;
  for (const auto& key : needed) {
    const Var left = key.vars.size() == 2
                         ? key.vars[0]
                         : subset_var.at(Monomial(key.vars.begin(), key.vars.end() - 1));
    subset_var.emplace(key.vars, ledger.and_of(left, key.vars.back()));
  }

  for (auto& term : work) {
    if (term.vars.size() < 3) continue;
    Monomial reduced;
    for (Var v : term.vars) {
      if (!block_of.contains(v)) reduced.push_back(v);
    }
    for (auto& [block, cluster] : clusters_of(term.vars)) {
      reduced.push_back(cluster.size() == 1 ? cluster[0] : subset_var.at(cluster));
    }
    std::sort(reduced.begin(), reduced.end());
    term.vars = std::move(reduced);
  }
}

void greedy_pass(std::vector<WorkingTerm>& work, Ledger& ledger) {
  for (;;) {
    std::map<std::pair<Var, Var>, std::size_t> frequency;
    for (const auto& term : work) {
      if (term.vars.size() < 3) continue;
      for (std::size_t x = 0; x < term.vars.size(); ++x) {
        for (std::size_t y = x + 1; y < term.vars.size(); ++y) {
          ++frequency[{term.vars[x], term.vars[y]}];
        }
      }
    }
    if (frequency.empty()) return;

    auto best = frequency.begin();
    for (auto it = frequency.begin(); it != frequency.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    const auto [a, b] = best->first;
    const Var anc = ledger.and_of(a, b);
    for (auto& term : work) {
      if (term.vars.size() >= 3 && has_both(term.vars, a, b)) replace_pair(term.vars, a, b, anc);
    }
  }
}

Coeff sum_abs(const PseudoBoolean& f) {
  Coeff total = 0;
  for (const auto& [key, c] : f.terms()) total += std::llabs(c);
  return total;
}

}  // namespace

PseudoBoolean and_gadget(Var a, Var b, Var anc, Coeff delta) {
  if (a == b || a == anc || b == anc) {
    throw Error(ErrorKind::kInvalidArgument, "AND gadget needs three distinct variables");
  }
  if (delta <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "AND gadget penalty must be positive");
  }
  return delta * (3 * var(anc) + var(a) * var(b) - 2 * var(a) * var(anc) -
                  2 * var(b) * var(anc));
}

Assignment QuadratizationResult::extend(const Assignment& original) const {
  Assignment out(static_cast<std::size_t>(total_vars));
  for (Var v = 1; v <= original_vars; ++v) out.set(v, original.at(v));
  for (const auto& s : substitutions) out.set(s.ancilla, out.at(s.a) && out.at(s.b));
  return out;
}

QuadratizationResult quadratize(const PseudoBoolean& f, const QuadratizeOptions& options) {
  const int n = options.original_vars.value_or(f.max_var());
  if (n < f.max_var()) {
    throw Error(ErrorKind::kInvalidArgument,
                "original_vars is smaller than the largest variable index of f");
  }
  if (options.delta && *options.delta <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "penalty weight delta must be positive");
  }

  std::vector<WorkingTerm> work;
  work.reserve(f.size());
  for (const auto& [key, c] : f.terms()) work.push_back({key, c});

  Ledger ledger(n + 1);
  if (!options.blocks.empty()) block_pass(work, options.blocks, ledger);
  greedy_pass(work, ledger);

  PseudoBoolean objective;
  for (auto& term : work) objective.accumulate(std::move(term.vars), term.coeff);

  QuadratizationResult result;
  result.original_vars = n;
  result.total_vars = ledger.next() - 1;
  result.substitutions = std::move(ledger.substitutions());

  if (options.delta) {
    result.delta = *options.delta;
  } else {
    Coeff base = 0;
    Coeff max_f = 0;
    if (n <= kExhaustiveDeltaLimit) {
      const auto table = value_table(f, n);
      const auto [lo, hi] = std::minmax_element(table.begin(), table.end());
      base = 1 + std::max(std::llabs(*lo), std::llabs(*hi));
      max_f = *hi;
    } else {
      base = 1 + sum_abs(f);
      max_f = f.constant_term();
      for (const auto& [key, c] : f.terms()) {
        if (!key.empty() && c > 0) max_f += c;
      }
    }
    Coeff lower = objective.constant_term();
    for (const auto& [key, c] : objective.terms()) {
      if (!key.empty() && c < 0) lower += c;
    }
    result.delta = std::max(base, max_f - lower);
  }

  result.reduced = std::move(objective);
  for (const auto& s : result.substitutions) {
    result.reduced += and_gadget(s.a, s.b, s.ancilla, result.delta);
  }
  return result;
}

ReductionReport verify_reduction(const PseudoBoolean& f, const QuadratizationResult& result,
                                 const VerifyOptions& options) {
  const int n = result.original_vars;
  const int total = result.total_vars;
  const int ancillas = total - n;
  if (n > kExhaustiveDeltaLimit) {
    throw Error(ErrorKind::kLimitExceeded, "verification enumerates at most 20 original variables");
  }
  if (total > 64) {
    throw Error(ErrorKind::kLimitExceeded, "verification supports at most 64 total variables");
  }

  ReductionReport report;
  report.exhaustive = total <= options.exhaustive_limit;
  report.consistent_match = true;
  report.minimum_preserved = true;

  const auto original = value_table(f, n);
  report.min_original = *std::min_element(original.begin(), original.end());
  report.max_original = *std::max_element(original.begin(), original.end());

  const MaskEvaluator reduced_at(result.reduced);
  std::vector<Coeff> reduced_table;
  if (report.exhaustive) reduced_table = value_table(result.reduced, total);
  auto reduced_value = [&](std::uint64_t mask) {
    return report.exhaustive ? reduced_table[mask] : reduced_at(mask);
  };

  auto fail = [&](std::uint64_t q, std::uint64_t full, Coeff expected, Coeff actual,
                  const char* reason) {
    if (report.counterexample) return;
    report.counterexample = ReductionCounterexample{
        Assignment::from_mask(q, static_cast<std::size_t>(n)).to_display(),
        Assignment::from_mask(full, static_cast<std::size_t>(total)).to_display(), expected,
        actual, reason};
  };

  std::mt19937_64 rng(options.seed);
  const std::uint64_t ancilla_space_mask =
      ancillas >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ancillas) - 1;

  std::vector<Coeff> consistent_values;
  consistent_values.reserve(original.size());

  for (std::uint64_t q = 0; q < original.size(); ++q) {
    std::uint64_t consistent = q;
    for (const auto& s : result.substitutions) {
      const bool bit = ((consistent >> (s.a - 1)) & 1u) && ((consistent >> (s.b - 1)) & 1u);
      if (bit) consistent |= std::uint64_t{1} << (s.ancilla - 1);
    }
    const Coeff expected = original[q];
    const Coeff at_consistent = reduced_value(consistent);
    ++report.checked_states;
    consistent_values.push_back(at_consistent);
    if (at_consistent != expected) {
      report.consistent_match = false;
      fail(q, consistent, expected, at_consistent, "consistent extension differs from f");
    }

    auto check_penalized = [&](std::uint64_t full) {
      if (full == consistent) return;
      const Coeff value = reduced_value(full);
      ++report.checked_states;
      if (!report.min_penalized || value < *report.min_penalized) report.min_penalized = value;
      if (value < expected) {
        report.minimum_preserved = false;
        fail(q, full, expected, value, "gadget-violating extension undercuts f");
      }
    };

    if (ancillas == 0) continue;
    if (report.exhaustive) {
      for (std::uint64_t anc = 0; anc <= ancilla_space_mask; ++anc) {
        check_penalized(q | (anc << n));
      }
    } else {
      for (int k = 0; k < ancillas; ++k) check_penalized(consistent ^ (std::uint64_t{1} << (n + k)));
      for (int s = 0; s < options.samples_per_state; ++s) {
        check_penalized(q | ((rng() & ancilla_space_mask) << n));
      }
    }
  }

  auto sorted_original = original;
  std::sort(sorted_original.begin(), sorted_original.end());
  std::sort(consistent_values.begin(), consistent_values.end());
  report.multiset_match = sorted_original == consistent_values;
  report.passed = report.consistent_match && report.minimum_preserved && report.multiset_match;
  return report;
}

namespace {

int checked_log2(int length, int dimension) {
  if (length < 4 || !std::has_single_bit(static_cast<unsigned>(length))) {
    throw Error(ErrorKind::kInvalidArgument, "N must be a power of two >= 4");
  }
  if (dimension != 2 && dimension != 3) {
    throw Error(ErrorKind::kInvalidArgument, "D must be 2 or 3");
  }
  return std::countr_zero(static_cast<unsigned>(length));
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

std::int64_t count_ancillas_protein(int length, int dimension) {
  const int m = checked_log2(length, dimension);
  return static_cast<std::int64_t>(length - 2) *
         (ipow(length, dimension) - dimension * m - 1);
}

std::int64_t total_qubits_2local(int length, int dimension) {
  const int m = checked_log2(length, dimension);
  return count_ancillas_protein(length, dimension) +
         static_cast<std::int64_t>(length - 2) * dimension * m;
}

}  // namespace hpaqc
