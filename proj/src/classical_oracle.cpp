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

#include "hpaqc/classical_oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <set>

#include "hpaqc/error.hpp"
#include "hpaqc/parallel.hpp"

namespace hpaqc {

MinimumResult brute_force_minimum(const PseudoBoolean& f, std::optional<int> n_vars) {
  const int n = n_vars.value_or(f.max_var());
  if (n < f.max_var()) {
    throw Error(ErrorKind::kInvalidArgument, "n_vars is smaller than the largest variable of f");
  }
  if (n > 24) {
    throw Error(ErrorKind::kLimitExceeded,
                "brute force enumerates at most 24 variables, got " + std::to_string(n));
  }
  const MaskEvaluator eval(f);
  const std::uint64_t count = std::uint64_t{1} << n;

  MinimumResult out;
  out.value = std::numeric_limits<Coeff>::max();
  std::vector<std::uint64_t> argmin;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Coeff value = eval(mask);
    if (value < out.value) {
      out.value = value;
      argmin.clear();
    }
    if (value == out.value) argmin.push_back(mask);
  }
  out.minimizers.reserve(argmin.size());
  for (auto mask : argmin) out.minimizers.push_back(Assignment::from_mask(mask, n));
  return out;
}

bool is_valid_conformation(const Conformation& conformation) {
  std::set<std::vector<int>> seen;
  for (Eigen::Index i = 0; i < conformation.rows(); ++i) {
    const Eigen::VectorXi row = conformation.row(i).transpose();
    if (!seen.insert(std::vector<int>(row.data(), row.data() + row.size())).second) return false;
    if (i > 0 && (conformation.row(i) - conformation.row(i - 1)).cwiseAbs().sum() != 1) {
      return false;
    }
  }
  return true;
}

int count_hh_contacts(const Conformation& conformation, const std::vector<Residue>& sequence) {
  if (conformation.rows() != static_cast<Eigen::Index>(sequence.size())) {
    throw Error(ErrorKind::kInvalidArgument, "conformation and sequence lengths differ");
  }
  int contacts = 0;
  for (Eigen::Index i = 0; i < conformation.rows(); ++i) {
    if (sequence[static_cast<std::size_t>(i)] != Residue::kHydrophobic) continue;
    for (Eigen::Index j = i + 2; j < conformation.rows(); ++j) {
      if (sequence[static_cast<std::size_t>(j)] != Residue::kHydrophobic) continue;
      if ((conformation.row(i) - conformation.row(j)).cwiseAbs().sum() == 1) ++contacts;
    }
  }
  return contacts;
}

int hp_energy(const Conformation& conformation, const std::vector<Residue>& sequence) {
  if (conformation.rows() != static_cast<Eigen::Index>(sequence.size())) {
    throw Error(ErrorKind::kInvalidArgument, "conformation and sequence lengths differ");
  }
  if (!is_valid_conformation(conformation)) {
    throw Error(ErrorKind::kInvalidArgument,
                "conformation is not a self-avoiding chain with unit steps");
  }
  return -count_hh_contacts(conformation, sequence);
}

// --- self-avoiding walk enumeration -----------------------------------------

namespace {

struct SymmetryState {
  bool turned = false;
  bool left_plane = false;
};

// Direction d: axis d / 2, sign + for even d.
class WalkSearch {
 public:
  WalkSearch(const std::vector<Residue>& sequence, int dimension, const EnumerateOptions& options,
             std::atomic<int>& shared_best)
      : seq_(sequence),
        n_(static_cast<int>(sequence.size())),
        dim_(dimension),
        options_(options),
        shared_best_(shared_best),
        width_(2 * n_ - 1),
        offset_(n_ - 1) {
    std::size_t cells = 1;
    for (int k = 0; k < dim_; ++k) cells *= static_cast<std::size_t>(width_);
    grid_.assign(cells, 0);
    stride_[0] = 1;
    stride_[1] = width_;
    stride_[2] = width_ * width_;
    h_after_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int k = n_ - 1; k >= 0; --k) {
      h_after_[static_cast<std::size_t>(k)] =
          h_after_[static_cast<std::size_t>(k) + 1] + (is_h(k) ? 1 : 0);
    }
    pos_.assign(static_cast<std::size_t>(n_), {0, 0, 0});
    cell_.assign(static_cast<std::size_t>(n_), 0);
  }

  struct Prefix {
    std::vector<std::array<int, 3>> points;
    SymmetryState state;
  };

  // Walk prefixes of `depth` residues allowed by the symmetry rules.
  std::vector<Prefix> prefixes(int depth) {
    std::vector<Prefix> out;
    collect_ = &out;
    collect_depth_ = depth;
    place(0, {0, 0, 0}, 0);
    run_from(1, SymmetryState{});
    collect_ = nullptr;
    return out;
  }

  void run(const Prefix& prefix) {
    int energy = 0;
    for (std::size_t k = 0; k < prefix.points.size(); ++k) {
      energy = place(static_cast<int>(k), prefix.points[k], energy);
    }
    run_from(static_cast<int>(prefix.points.size()), prefix.state, energy);
  }

  int best = std::numeric_limits<int>::max();
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  Conformation witness;

 private:
  bool is_h(int k) const { return seq_[static_cast<std::size_t>(k)] == Residue::kHydrophobic; }

  std::size_t index_of(const std::array<int, 3>& p) const {
    std::size_t idx = 0;
    for (int k = 0; k < dim_; ++k) {
      idx += static_cast<std::size_t>(p[static_cast<std::size_t>(k)] + offset_) *
             static_cast<std::size_t>(stride_[k]);
    }
    return idx;
  }

  // Places residue k at p, returns the energy after placement.
  int place(int k, const std::array<int, 3>& p, int energy) {
    const std::size_t idx = index_of(p);
    pos_[static_cast<std::size_t>(k)] = p;
    cell_[static_cast<std::size_t>(k)] = idx;
    grid_[idx] = static_cast<std::uint8_t>(k + 1);
    if (!is_h(k)) return energy;
    for (int d = 0; d < 2 * dim_; ++d) {
      const auto q = step(p, d);
      if (!inside(q)) continue;
      const int other = grid_[index_of(q)] - 1;
      if (other >= 0 && other < k - 1 && is_h(other)) --energy;
    }
    return energy;
  }

  void unplace(int k) { grid_[cell_[static_cast<std::size_t>(k)]] = 0; }

  std::array<int, 3> step(std::array<int, 3> p, int d) const {
    p[static_cast<std::size_t>(d / 2)] += (d % 2 == 0) ? 1 : -1;
    return p;
  }

  bool inside(const std::array<int, 3>& p) const {
    for (int k = 0; k < dim_; ++k) {
      const int c = p[static_cast<std::size_t>(k)];
      if (c < -offset_ || c > offset_) return false;
    }
    return true;
  }

  std::uint64_t weight(const SymmetryState& s) const {
    if (!options_.use_symmetry) return 1;
    std::uint64_t w = dim_ == 2 ? 4 : 6;
    if (s.turned) w *= dim_ == 2 ? 2 : 4;
    if (s.left_plane) w *= 2;
    return w;
  }

  bool allowed(int k, int d, const SymmetryState& s) const {
    if (!options_.use_symmetry) return true;
    if (k == 1) return d == 0;
    if (!s.turned) return d == 0 || d == 2;
    if (dim_ == 3 && !s.left_plane) return d != 5;
    return true;
  }

  SymmetryState advance(int d, SymmetryState s) const {
    if (!options_.use_symmetry) return s;
    if (d == 2) s.turned = true;
    if (d == 4) s.left_plane = true;
    return s;
  }

  void record(int energy, const SymmetryState& s) {
    if (energy < best) {
      best = energy;
      count = 0;
      witness = Conformation(n_, dim_);
      for (int k = 0; k < n_; ++k) {
        for (int a = 0; a < dim_; ++a) {
          witness(k, a) = pos_[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
        }
      }
      int seen = shared_best_.load();
      while (energy < seen && !shared_best_.compare_exchange_weak(seen, energy)) {
      }
    }
    if (energy == best) count += weight(s);
  }

  void run_from(int k, const SymmetryState& s, int energy = 0) {
    ++nodes;
    if (collect_ && k == collect_depth_) {
      Prefix p;
      p.points.assign(pos_.begin(), pos_.begin() + k);
      p.state = s;
      collect_->push_back(std::move(p));
      return;
    }
    if (k == n_) {
      record(energy, s);
      return;
    }
    if (options_.prune && !collect_) {
      const int bound = (2 * dim_ - 1) * h_after_[static_cast<std::size_t>(k)];
      const int incumbent = std::min(best, shared_best_.load(std::memory_order_relaxed));
      if (energy - bound > incumbent) return;
    }
    const auto& here = pos_[static_cast<std::size_t>(k - 1)];
    for (int d = 0; d < 2 * dim_; ++d) {
      if (!allowed(k, d, s)) continue;
      const auto next = step(here, d);
      if (!inside(next) || grid_[index_of(next)] != 0) continue;
      const int e = place(k, next, energy);
      run_from(k + 1, advance(d, s), e);
      unplace(k);
    }
  }

  const std::vector<Residue>& seq_;
  int n_;
  int dim_;
  EnumerateOptions options_;
  std::atomic<int>& shared_best_;
  int width_;
  int offset_;
  std::array<int, 3> stride_{};
  std::vector<std::uint8_t> grid_;
  std::vector<int> h_after_;
  std::vector<std::array<int, 3>> pos_;
  std::vector<std::size_t> cell_;
  std::vector<Prefix>* collect_ = nullptr;
  int collect_depth_ = 0;
};

}  // namespace

NativeResult enumerate_native(const std::vector<Residue>& sequence, int dimension,
                              const EnumerateOptions& options) {
  const int n = static_cast<int>(sequence.size());
  if (dimension != 2 && dimension != 3) {
    throw Error(ErrorKind::kInvalidArgument, "dimension must be 2 or 3");
  }
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "sequence is empty");
  const int limit = options.long_run ? kLongRunWalkLimit : kDefaultWalkLimit;
  if (n > limit) {
    throw Error(ErrorKind::kLimitExceeded,
                "sequence length " + std::to_string(n) + " exceeds the enumeration guard of " +
                    std::to_string(limit) +
                    (options.long_run ? "" : "; pass the long-run flag to allow up to 24"));
  }

  std::atomic<int> shared_best{std::numeric_limits<int>::max()};
  if (n == 1) {
    NativeResult out;
    out.degeneracy = 1;
    out.nodes_visited = 1;
    out.witness = Conformation::Zero(1, dimension);
    return out;
  }

  const int depth = std::min(n, 6);
  auto tasks = WalkSearch(sequence, dimension, options, shared_best).prefixes(depth);

  struct Partial {
    int best = std::numeric_limits<int>::max();
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    Conformation witness;
  };
  std::vector<Partial> partials(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    WalkSearch search(sequence, dimension, options, shared_best);
    search.run(tasks[t]);
    partials[t] = {search.best, search.count, search.nodes, std::move(search.witness)};
  });

  NativeResult out;
  out.min_energy = std::numeric_limits<int>::max();
  for (const auto& p : partials) out.min_energy = std::min(out.min_energy, p.best);
  for (const auto& p : partials) {
    out.nodes_visited += p.nodes;
    if (p.best != out.min_energy) continue;
    if (out.degeneracy == 0) out.witness = p.witness;
    out.degeneracy += p.count;
  }
  return out;
}

}  // namespace hpaqc
