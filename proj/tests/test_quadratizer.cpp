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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "hpaqc/error.hpp"
#include "hpaqc/hp_hamiltonian.hpp"
#include "hpaqc/presets.hpp"
#include "hpaqc/quadratizer.hpp"
#include "oracles.hpp"

using namespace hpaqc;

namespace {

struct Row {
  const char* bits;  // q6 ... q1
  Coeff base;
  Coeff per_delta;
};

// Reduced toy truth table: 16 consistent rows, then the listed penalized ones.
const Row kTable4[] = {
    {"000010", 0, 0}, {"000000", 1, 0}, {"010011", 1, 0}, {"000110", 1, 0}, {"010111", 1, 0},
    {"001010", 1, 0}, {"000001", 2, 0}, {"000100", 2, 0}, {"001000", 2, 0}, {"011011", 2, 0},
    {"101110", 2, 0}, {"000101", 3, 0}, {"001001", 3, 0}, {"101100", 3, 0}, {"111111", 3, 0},
    {"101101", 4, 0},
    {"010010", 0, 1}, {"010110", 0, 1}, {"000011", 1, 1}, {"011010", 1, 1}, {"100110", 1, 1},
    {"101010", 1, 1}, {"000111", 2, 1}, {"001011", 2, 1}, {"111100", 3, 3}, {"100011", 1, 4},
    {"110010", 1, 4}, {"110100", 2, 4}, {"110001", 3, 4}, {"111000", 3, 4}, {"110000", 2, 6},
};

}  // namespace

TEST_CASE("AND gadget truth table") {
  for (Coeff delta : {1, 5}) {
    const auto g = and_gadget(1, 2, 3, delta);
    // (anc, a, b) -> multiple of delta
    const int expected[2][2][2] = {{{0, 0}, {0, 1}}, {{3, 1}, {1, 0}}};
    for (int anc = 0; anc < 2; ++anc) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          CHECK(oracle::eval(g, {0, a, b, anc}) == delta * expected[anc][a][b]);
        }
      }
    }
  }
  CHECK_THROWS_AS(and_gadget(1, 1, 3, 5), Error);
  CHECK_THROWS_AS(and_gadget(1, 2, 2, 5), Error);
  CHECK_THROWS_AS(and_gadget(1, 2, 3, 0), Error);
}

TEST_CASE("toy reduction reproduces the 2-local form term for term") {
  const auto toy = toy_hamiltonian();
  QuadratizeOptions opts;
  opts.delta = 5;
  const auto r = quadratize(toy, opts);
  REQUIRE(r.substitutions.size() == 2);
  CHECK(r.substitutions[0] == Substitution{1, 2, 5});
  CHECK(r.substitutions[1] == Substitution{3, 4, 6});
  CHECK(r.original_vars == 4);
  CHECK(r.total_vars == 6);
  CHECK(r.delta == 5);
  const PseudoBoolean expected = 1 + var(1) - var(2) + var(3) + var(4) -
                                 PseudoBoolean::term({3, 5}) + PseudoBoolean::term({5, 6}) +
                                 and_gadget(1, 2, 5, 5) + and_gadget(3, 4, 6, 5);
  CHECK(r.reduced == expected);
  CHECK(degree(r.reduced) == 2);

  for (Coeff delta : {5, 9}) {
    opts.delta = delta;
    const auto rd = quadratize(toy, opts);
    for (const auto& row : kTable4) {
      CHECK(evaluate(rd.reduced, Assignment::from_display(row.bits)) == row.base + delta * row.per_delta);
    }
  }
}

TEST_CASE("default delta and extension") {
  const auto toy = toy_hamiltonian();
  const auto r = quadratize(toy);
  CHECK(r.delta == 5);
  const auto ext = r.extend(Assignment::from_display("1011"));
  CHECK(ext.to_display() == "011011");

  // A function with negative values still gets a delta above its range.
  const PseudoBoolean neg = -3 * PseudoBoolean::term({1, 2, 3}) + 2 * var(4) - 1;
  const auto rn = quadratize(neg);
  CHECK(verify_reduction(neg, rn).passed);
}

TEST_CASE("quadratic inputs pass through unchanged") {
  const PseudoBoolean f = 3 + var(1) - 2 * PseudoBoolean::term({1, 2});
  const auto r = quadratize(f);
  CHECK(r.reduced == f);
  CHECK(r.substitutions.empty());
  CHECK(r.total_vars == r.original_vars);
  const auto report = verify_reduction(f, r);
  CHECK(report.passed);
  CHECK(report.exhaustive);
}

TEST_CASE("verification of the toy reduction") {
  const auto toy = toy_hamiltonian();
  QuadratizeOptions opts;
  opts.delta = 5;
  const auto r = quadratize(toy, opts);
  const auto report = verify_reduction(toy, r);
  CHECK(report.passed);
  CHECK(report.exhaustive);
  CHECK(report.checked_states == 64);
  CHECK(report.consistent_match);
  CHECK(report.minimum_preserved);
  CHECK(report.multiset_match);
  CHECK(report.min_original == 0);
  CHECK(report.max_original == 4);
  REQUIRE(report.min_penalized);
  CHECK(*report.min_penalized == 5);

  // Full sorted spectrum: the 16 original values, then two 5s and a 6.
  std::vector<Coeff> values = oracle::table(r.reduced, 6);
  std::sort(values.begin(), values.end());
  std::vector<Coeff> original = oracle::table(toy, 4);
  std::sort(original.begin(), original.end());
  CHECK(std::equal(original.begin(), original.end(), values.begin()));
  CHECK(values[16] == 5);
  CHECK(values[17] == 5);
  CHECK(values[18] == 6);
}

TEST_CASE("a too-small delta is caught") {
  // At q1 = q2 = 0, q3 = 1 a wrongly set ancilla gains 6 and pays only 3 delta.
  const PseudoBoolean f = 6 - 6 * PseudoBoolean::term({1, 2, 3}) + 6 * var(1) + 6 * var(2);
  QuadratizeOptions opts;
  opts.delta = 1;
  const auto r = quadratize(f, opts);
  const auto report = verify_reduction(f, r);
  CHECK(report.consistent_match);
  CHECK_FALSE(report.minimum_preserved);
  CHECK_FALSE(report.passed);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->actual < report.counterexample->expected);
}

TEST_CASE("ancillas are contiguous and above the originals") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto f = oracle::random_pbf(rng, 6, 5, 12, 5);
    QuadratizeOptions opts;
    opts.original_vars = 6;
    const auto r = quadratize(f, opts);
    CHECK(degree(r.reduced) <= 2);
    Var next = 7;
    for (const auto& s : r.substitutions) {
      CHECK(s.ancilla == next++);
      CHECK(s.a < s.ancilla);
      CHECK(s.b < s.ancilla);
    }
    CHECK(r.total_vars == next - 1);
    const auto again = quadratize(f, opts);
    CHECK(again.reduced == r.reduced);
    CHECK(again.substitutions == r.substitutions);
  }
}

TEST_CASE("a k-local monomial needs k-2 ancillas") {
  for (int k = 3; k <= 8; ++k) {
    Monomial vars;
    for (int i = 1; i <= k; ++i) vars.push_back(i);
    const auto r = quadratize(PseudoBoolean::term(vars, 2));
    CHECK(r.substitutions.size() == static_cast<std::size_t>(k - 2));
  }
}

TEST_CASE("spectrum preservation on random polynomials") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> nv(3, 6);
  for (int t = 0; t < 100; ++t) {
    const int n = nv(rng);
    const auto f = oracle::random_pbf(rng, n, 5, 10, 5);
    QuadratizeOptions opts;
    opts.original_vars = n;
    const auto r = quadratize(f, opts);
    const auto report = verify_reduction(f, r);
    REQUIRE(report.passed);

    // Independent check: min over every ancilla setting equals f.
    const int total = r.total_vars;
    const auto reduced = oracle::table(r.reduced, total);
    const auto original = oracle::table(f, n);
    for (std::uint64_t q = 0; q < original.size(); ++q) {
      Coeff best = std::numeric_limits<Coeff>::max();
      for (std::uint64_t anc = 0; anc < (std::uint64_t{1} << (total - n)); ++anc) {
        best = std::min(best, reduced[q | (anc << n)]);
      }
      REQUIRE(best == original[q]);
    }
  }
}

TEST_CASE("protein reduction with residue blocks") {
  const auto inst = LatticeInstance::parse("HPPH", 2);
  const auto built = build_protein(inst);
  QuadratizeOptions opts;
  opts.original_vars = 8;
  opts.blocks = built.blocks;
  const auto r = quadratize(built.energy, opts);
  CHECK(degree(r.reduced) == 2);
  CHECK(r.total_vars - r.original_vars == count_ancillas_protein(4, 2));
  CHECK(r.total_vars == total_qubits_2local(4, 2));

  Coeff best = std::numeric_limits<Coeff>::max();
  for (std::uint64_t m = 0; m < 256; ++m) {
    best = std::min(best, evaluate(r.reduced, r.extend(Assignment::from_mask(m, 8))));
  }
  CHECK(best == -1);
  const auto report = verify_reduction(built.energy, r);
  CHECK(report.passed);
  CHECK_FALSE(report.exhaustive);

  const auto greedy = quadratize(built.energy, QuadratizeOptions{{}, 8, {}});
  CHECK(degree(greedy.reduced) == 2);
  CHECK(verify_reduction(built.energy, greedy).passed);
}

TEST_CASE("closed-form qubit counts") {
  CHECK(total_qubits_2local(4, 2) == 30);
  CHECK(count_ancillas_protein(4, 2) == 22);
  CHECK(total_qubits_2local(8, 3) == 3066);
  for (int n : {4, 8, 16}) {
    for (int d : {2, 3}) {
      std::int64_t nd = 1;
      for (int k = 0; k < d; ++k) nd *= n;
      const int bits = d * (n == 4 ? 2 : n == 8 ? 3 : 4);
      std::int64_t per_residue = 0;
      for (int k = 2; k <= bits; ++k) per_residue += oracle::binomial(bits, k);
      CHECK(count_ancillas_protein(n, d) == (n - 2) * per_residue);
      CHECK(total_qubits_2local(n, d) == (n - 2) * (nd - 1));
    }
  }
  CHECK_THROWS_AS(total_qubits_2local(6, 2), Error);
  CHECK_THROWS_AS(count_ancillas_protein(4, 4), Error);
}
