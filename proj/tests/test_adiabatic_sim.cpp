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
#include <cmath>
#include <random>

#include "doctest.h"
#include "hpaqc/adiabatic_sim.hpp"
#include "hpaqc/error.hpp"
#include "hpaqc/hp_hamiltonian.hpp"
#include "hpaqc/presets.hpp"
#include "hpaqc/quadratizer.hpp"
#include "oracles.hpp"

using namespace hpaqc;

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

}  // namespace

TEST_CASE("diagonal of the problem Hamiltonian") {
  const auto h1 = to_spin_hamiltonian<double>(var(1), 1);
  CHECK(h1.problem_diagonal() == Eigen::Vector2d(0, 1));
  const auto hc = to_spin_hamiltonian<double>(PseudoBoolean(7), 3);
  CHECK((hc.problem_diagonal().array() == 7).all());

  const auto toy = toy_hamiltonian();
  const auto ht = to_spin_hamiltonian<double>(toy, 4);
  std::vector<double> diag(ht.problem_diagonal().data(), ht.problem_diagonal().data() + 16);
  std::sort(diag.begin(), diag.end());
  const std::vector<double> table2{0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4};
  CHECK(diag == table2);
  const auto raw = oracle::table(toy, 4);
  for (int b = 0; b < 16; ++b) CHECK(ht.problem_diagonal()(b) == static_cast<double>(raw[static_cast<std::size_t>(b)]));

  CHECK_THROWS_AS(to_spin_hamiltonian<double>(var(5), 4), Error);
  CHECK_THROWS_AS(to_spin_hamiltonian<double>(var(1), 17), Error);
  CHECK_THROWS_AS(SpinHamiltonian<double>(2, Eigen::VectorXd::Zero(3)), Error);
}

TEST_CASE("interpolated matrix entries") {
  const auto h = to_spin_hamiltonian<double>(var(1) + 2 * var(2), 2);
  const auto m = h.interpolate(0.25);
  CHECK(m(0, 0) == doctest::Approx(0.75 * 1.0 + 0.25 * 0));
  CHECK(m(3, 3) == doctest::Approx(0.75 * 1.0 + 0.25 * 3));
  CHECK(m(0, 1) == doctest::Approx(-0.375));
  CHECK(m(0, 2) == doctest::Approx(-0.375));
  CHECK(m(0, 3) == 0);
  CHECK(m(1, 2) == 0);
  CHECK(m.isApprox(m.transpose()));
  CHECK(h.interpolate(1.0).isApprox(Eigen::MatrixXd(h.problem_diagonal().asDiagonal())));
  CHECK_THROWS_AS(h.interpolate(-0.1), Error);
  CHECK_THROWS_AS(h.interpolate(1.5), Error);
  CHECK_THROWS_AS(h.interpolate(std::nan("")), Error);

  const auto e0 = sorted_eigenvalues(h.interpolate(0.0));
  const std::vector<double> expected{0, 1, 1, 2};
  for (int k = 0; k < 4; ++k) CHECK(e0[static_cast<std::size_t>(k)] == doctest::Approx(expected[static_cast<std::size_t>(k)]).epsilon(1e-12));
}

TEST_CASE("two-level closed form") {
  const auto h = to_spin_hamiltonian<double>(var(1), 1);
  const auto m = h.interpolate(0.5);
  CHECK(m(0, 0) == doctest::Approx(0.25));
  CHECK(m(1, 1) == doctest::Approx(0.75));
  CHECK(m(0, 1) == doctest::Approx(-0.25));
  const double mean = 0.5;
  const double radius = std::sqrt(0.25 * 0.25 + 0.25 * 0.25);
  const auto e = sorted_eigenvalues(m);
  CHECK(e[0] == doctest::Approx(mean - radius));
  CHECK(e[1] == doctest::Approx(mean + radius));
}

TEST_CASE("initial spectrum has binomial multiplicities") {
  for (int n = 1; n <= 8; ++n) {
    const auto h = to_spin_hamiltonian<double>(PseudoBoolean(), n);
    const auto e = sorted_eigenvalues(h.initial());
    std::size_t idx = 0;
    for (int k = 0; k <= n; ++k) {
      for (std::int64_t c = 0; c < oracle::binomial(n, k); ++c) {
        REQUIRE(std::abs(e[idx++] - k) < 1e-9);
      }
    }
  }
}

TEST_CASE("Jacobi solver agrees with the library solver") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  for (int n : {1, 2, 5, 16, 40}) {
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = normal(rng);
    }
    JacobiEigenSolver<Eigen::MatrixXd> jacobi(a);
    REQUIRE(jacobi.info() == Eigen::Success);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
    CHECK((jacobi.eigenvalues() - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::MatrixXd& v = jacobi.eigenvectors();
    CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((a * v - v * jacobi.eigenvalues().asDiagonal()).cwiseAbs().maxCoeff() < 1e-9);
    for (int i = 1; i < n; ++i) CHECK(jacobi.eigenvalues()(i - 1) <= jacobi.eigenvalues()(i));
  }

  JacobiEigenSolver<Eigen::MatrixXd> capped;
  capped.set_max_sweeps(0);
  Eigen::Matrix2d off;
  off << 0, 1, 1, 0;
  capped.compute(off);
  CHECK(capped.info() == Eigen::NoConvergence);
}

TEST_CASE("trace of the reduced toy Hamiltonian") {
  const auto toy = toy_hamiltonian();
  QuadratizeOptions opts;
  opts.delta = 5;
  const auto reduced = quadratize(toy, opts).reduced;
  const auto h = to_spin_hamiltonian<double>(reduced, 6);
  SpectrumOptions so;
  so.levels = 19;
  for (auto solver : {EigenSolverKind::kEigen, EigenSolverKind::kJacobi}) {
    so.solver = solver;
    const auto trace = spectrum_trace(h, so);
    REQUIRE(trace.s_grid.size() == 101);
    CHECK(trace.s_grid.front() == 0.0);
    CHECK(trace.s_grid.back() == 1.0);
    CHECK(trace.eigenvalues.rows() == 101);
    CHECK(trace.eigenvalues.cols() == 19);
    const std::vector<double> expected{0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 5, 5, 6};
    for (int k = 0; k < 19; ++k) CHECK(std::abs(trace.eigenvalues(100, k) - expected[static_cast<std::size_t>(k)]) < 1e-9);
    for (Eigen::Index row = 0; row < 101; ++row) {
      for (int k = 1; k < 19; ++k) REQUIRE(trace.eigenvalues(row, k - 1) <= trace.eigenvalues(row, k));
    }
    CHECK(trace.g_min >= 0);
    CHECK(trace.g_min_interior > 0);
    CHECK(std::isfinite(trace.epsilon));
  }
}

TEST_CASE("s = 1 eigenvalues are the sorted diagonal") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const int n = 1 + t % 8;
    const auto f = oracle::random_pbf(rng, n, 4, 8, 6);
    const auto h = to_spin_hamiltonian<double>(f, n);
    auto values = oracle::table(f, n);
    std::sort(values.begin(), values.end());
    SpectrumOptions so;
    so.s_points = 2;
    so.levels = 1 << n;
    const auto trace = spectrum_trace(h, so);
    for (int k = 0; k < so.levels; ++k) CHECK(std::abs(trace.eigenvalues(1, k) - values[static_cast<std::size_t>(k)]) < 1e-9);
  }
}

TEST_CASE("HPPH sweep") {
  const auto built = build_protein(LatticeInstance::parse("HPPH", 2));
  const auto h = to_spin_hamiltonian<double>(built.energy, 8);
  SpectrumOptions so;
  so.snapshots = true;
  const auto trace = spectrum_trace(h, so);

  CHECK(trace.ground_degeneracy.back() == 2);
  CHECK(trace.degenerate_at(100));
  CHECK(std::isnan(trace.epsilons.back()));
  CHECK(std::abs(trace.eigenvalues(100, 0) + 1) < 1e-9);
  CHECK(std::abs(trace.eigenvalues(100, 1) + 1) < 1e-9);
  CHECK(trace.g_min_interior > 0);
  CHECK(trace.g_min_interior_index > 0);
  CHECK(trace.g_min_interior_index < 100);
  CHECK(trace.ground_degeneracy.front() == 1);

  for (const auto& p : trace.snapshots) CHECK(std::abs(p.sum() - 1.0) < 1e-10);
  for (int b = 0; b < 256; ++b) CHECK(std::abs(trace.snapshots.front()(b) - 1.0 / 256) < 1e-10);

  const auto minima = oracle::table(built.energy, 8);
  const auto& last = trace.snapshots.back();
  double on_minima = 0;
  for (int b = 0; b < 256; ++b) {
    if (minima[static_cast<std::size_t>(b)] == -1) {
      on_minima += last(b);
    } else {
      CHECK(last(b) < 1e-12);
    }
  }
  CHECK(std::abs(on_minima - 1) < 1e-10);
}

TEST_CASE("eigenvectors stay orthonormal along the sweep") {
  const auto toy = toy_hamiltonian();
  const auto h = to_spin_hamiltonian<double>(toy, 4);
  for (double s : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.interpolate(s));
    const auto& v = solver.eigenvectors();
    CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-8);
    JacobiEigenSolver<Eigen::MatrixXd> jacobi(h.interpolate(s));
    const auto& w = jacobi.eigenvectors();
    CHECK((w.transpose() * w - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("snapshots and epsilon on small systems") {
  const auto h = to_spin_hamiltonian<double>(var(1), 1);
  const auto snaps = ground_snapshots(h, 3);
  REQUIRE(snaps.size() == 3);
  CHECK(snaps[0](0) == doctest::Approx(0.5));
  CHECK(snaps[2](0) == doctest::Approx(1.0));
  CHECK(snaps[2](1) == doctest::Approx(0.0));

  // Matrix element and gap against a direct 2x2 solve.
  SpectrumOptions so;
  so.s_points = 5;
  so.levels = 2;
  const auto trace = spectrum_trace(h, so);
  const Eigen::MatrixXd d = h.derivative();
  for (std::size_t k = 0; k < 5; ++k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.interpolate(trace.s_grid[k]));
    const double expected = std::abs(solver.eigenvectors().col(1).dot(d * solver.eigenvectors().col(0)));
    CHECK(trace.epsilons[k] == doctest::Approx(expected));
    CHECK(trace.gaps[k] == doctest::Approx(solver.eigenvalues()(1) - solver.eigenvalues()(0)));
  }
}

TEST_CASE("spectrum argument validation") {
  const auto h = to_spin_hamiltonian<double>(var(1) + var(2), 2);
  SpectrumOptions so;
  so.s_points = 1;
  CHECK_THROWS_AS(spectrum_trace(h, so), Error);
  so.s_points = 3;
  so.levels = 5;
  CHECK_THROWS_AS(spectrum_trace(h, so), Error);
  so.levels = 0;
  CHECK_THROWS_AS(spectrum_trace(h, so), Error);
}

TEST_CASE("constant problem has no gap at s = 1") {
  const auto h = to_spin_hamiltonian<double>(PseudoBoolean(2), 2);
  SpectrumOptions so;
  so.s_points = 3;
  so.levels = 4;
  const auto trace = spectrum_trace(h, so);
  CHECK(trace.ground_degeneracy.back() == 4);
  CHECK(std::isnan(trace.gaps.back()));
  CHECK(trace.g_min == doctest::Approx(0.5));
}
