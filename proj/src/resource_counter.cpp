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

#include "hpaqc/resource_counter.hpp"

#include <bit>
#include <set>

#include "hpaqc/error.hpp"
#include "hpaqc/quadratizer.hpp"

namespace hpaqc {
namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Subsets of `vars` of size k as sorted monomials, encoded through bitmasks.
template <typename Visit>
void for_each_subset(const std::vector<Var>& vars, int k, Visit&& visit) {
  const int n = static_cast<int>(vars.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    Monomial m;
    for (int b = 0; b < n; ++b) {
      if (mask & (1u << b)) m.push_back(vars[static_cast<std::size_t>(b)]);
    }
    if (!visit(m)) return;
  }
}

}  // namespace

std::map<int, std::int64_t> table1_counts(int length, int dimension) {
  if (length < 4 || !std::has_single_bit(static_cast<unsigned>(length))) {
    throw Error(ErrorKind::kInvalidArgument, "N must be a power of two >= 4");
  }
  if (dimension != 2 && dimension != 3) {
    throw Error(ErrorKind::kInvalidArgument, "D must be 2 or 3");
  }
  const std::int64_t n = static_cast<std::int64_t>(dimension) *
                         std::countr_zero(static_cast<unsigned>(length));
  const std::int64_t free_residues = length - 2;
  const std::int64_t pairs = binomial(free_residues, 2);

  std::map<int, std::int64_t> counts;
  counts[0] = 1;
  counts[1] = free_residues * n;
  for (std::int64_t k = 2; k <= n; ++k) {
    std::int64_t split = 0;
    for (std::int64_t i = 1; i <= k - 1; ++i) split += binomial(n, i) * binomial(n, k - i);
    counts[static_cast<int>(k)] = pairs * split + free_residues * binomial(n, k);
  }
  for (std::int64_t k = n + 1; k <= 2 * n; ++k) {
    std::int64_t split = 0;
    for (std::int64_t i = k - n; i <= n; ++i) split += binomial(n, i) * binomial(n, k - i);
    counts[static_cast<int>(k)] = pairs * split;
  }
  return counts;
}

bool ResourceReport::within_bound() const {
  for (const auto& [k, actual] : per_locality_actual) {
    const auto it = per_locality_bound.find(k);
    if (it == per_locality_bound.end() || actual > it->second) return false;
  }
  return true;
}

ResourceReport resource_report(const LatticeInstance& instance, const ProteinHamiltonian& built,
                               const ResourceOptions& options) {
  ResourceReport report;
  report.per_locality_bound = table1_counts(instance.length(), instance.dimension());
  for (int k = 0; k <= 2 * instance.bits_per_residue(); ++k) report.per_locality_actual[k] = 0;
  for (const auto& [k, count] : term_census(built.energy)) {
    report.per_locality_actual[k] = static_cast<std::int64_t>(count);
  }
  report.free_qubits = instance.free_vars();
  report.ancilla_qubits = count_ancillas_protein(instance.length(), instance.dimension());
  report.total_qubits = report.free_qubits + report.ancilla_qubits;

  std::map<Var, std::size_t> block_of;
  for (std::size_t b = 0; b < built.blocks.size(); ++b) {
    for (Var v : built.blocks[b]) block_of[v] = b;
  }
  const auto& terms = built.energy.terms();
  const std::size_t cap = options.max_listed_monomials;

  for (const auto& [k, bound] : report.per_locality_bound) {
    const std::int64_t actual = report.per_locality_actual[k];
    if (actual == bound) continue;
    LocalityDeviation dev{k, bound, actual, {}, {}};

    for (const auto& [key, c] : terms) {
      if (static_cast<int>(key.size()) != k) continue;
      std::set<std::size_t> touched;
      for (Var v : key) touched.insert(block_of.at(v));
      if (touched.size() > 2 && dev.unexpected.size() < cap) dev.unexpected.push_back(key);
    }

    auto note_missing = [&](const Monomial& m) {
      if (!terms.contains(m)) dev.missing.push_back(m);
      return dev.missing.size() < cap;
    };
    bool more = true;
    if (k == 0) {
      note_missing({});
    } else {
      for (std::size_t b = 0; more && b < built.blocks.size(); ++b) {
        for_each_subset(built.blocks[b], k, [&](const Monomial& m) { return more = note_missing(m); });
      }
      for (std::size_t b1 = 0; more && b1 < built.blocks.size(); ++b1) {
        for (std::size_t b2 = b1 + 1; more && b2 < built.blocks.size(); ++b2) {
          for (int i = 1; more && i < k; ++i) {
            for_each_subset(built.blocks[b1], i, [&](const Monomial& left) {
              for_each_subset(built.blocks[b2], k - i, [&](const Monomial& right) {
                Monomial m = left;
                m.insert(m.end(), right.begin(), right.end());
                return more = note_missing(m);
              });
              return more;
            });
          }
        }
      }
    }
    report.deviations.push_back(std::move(dev));
  }

  if (options.run_quadratizer) {
    QuadratizeOptions q;
    q.original_vars = instance.free_vars();
    q.blocks = built.blocks;
    const auto reduced = quadratize(built.energy, q);
    report.empirical_ancillas = reduced.total_vars - reduced.original_vars;
  }
  return report;
}

}  // namespace hpaqc
