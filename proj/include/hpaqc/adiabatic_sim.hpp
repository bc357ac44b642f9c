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
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hpaqc/error.hpp"
#include "hpaqc/parallel.hpp"
#include "hpaqc/pbf.hpp"

namespace hpaqc {

inline constexpr int kMaxSpinQubits = 16;

/// Diagonal problem Hamiltonian plus the implicit transverse-field driver
/// sum_i (I - sigma^x_i) / 2. Basis index b carries q_i in bit i-1, with
/// q_i = 0 for sigma^z = +1.
template <typename Scalar_>
class SpinHamiltonian {
 public:
  using Scalar = Scalar_;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  SpinHamiltonian(int n_qubits, Vector problem_diagonal)
      : n_qubits_(n_qubits), problem_(std::move(problem_diagonal)) {
    if (n_qubits < 0 || n_qubits > kMaxSpinQubits) {
      throw Error(ErrorKind::kLimitExceeded,
                  "spin Hamiltonian supports at most " + std::to_string(kMaxSpinQubits) +
                      " qubits, got " + std::to_string(n_qubits));
    }
    if (problem_.size() != dimension()) {
      throw Error(ErrorKind::kInvalidArgument, "problem diagonal must have 2^n entries");
    }
  }

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dimension() const noexcept { return Eigen::Index{1} << n_qubits_; }
  const Vector& problem_diagonal() const noexcept { return problem_; }

  /// (1 - s) H(0) + s H_problem as a dense matrix.
  Matrix interpolate(Scalar s) const {
    if (!(s >= Scalar(0) && s <= Scalar(1))) {
      throw Error(ErrorKind::kOutOfRange, "sweep parameter must lie in [0, 1]");
    }
    const Eigen::Index dim = dimension();
    const Scalar hop = -(Scalar(1) - s) / Scalar(2);
    Matrix h = Matrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
      h(b, b) = (Scalar(1) - s) * Scalar(n_qubits_) / Scalar(2) + s * problem_(b);
      for (int i = 0; i < n_qubits_; ++i) h(b, b ^ (Eigen::Index{1} << i)) = hop;
    }
    return h;
  }

  Matrix initial() const { return interpolate(Scalar(0)); }

  /// dH/ds = H_problem - H(0).
  Matrix derivative() const {
    Matrix d = -initial();
    d.diagonal() += problem_;
    return d;
  }

 private:
  int n_qubits_;
  Vector problem_;
};

template <typename Scalar = double>
SpinHamiltonian<Scalar> to_spin_hamiltonian(const PseudoBoolean& f, int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxSpinQubits) {
    throw Error(ErrorKind::kLimitExceeded,
                "spin Hamiltonian supports at most " + std::to_string(kMaxSpinQubits) +
                    " qubits, got " + std::to_string(n_qubits));
  }
  if (f.max_var() > n_qubits) {
    throw Error(ErrorKind::kOutOfRange, "function mentions q" + std::to_string(f.max_var()) +
                                            " beyond " + std::to_string(n_qubits) + " qubits");
  }
  const std::vector<Coeff> table = value_table(f, n_qubits);
  typename SpinHamiltonian<Scalar>::Vector diag(static_cast<Eigen::Index>(table.size()));
  for (std::size_t b = 0; b < table.size(); ++b) {
    diag(static_cast<Eigen::Index>(b)) = static_cast<Scalar>(table[b]);
  }
  return SpinHamiltonian<Scalar>(n_qubits, std::move(diag));
}

/// Cyclic Jacobi eigensolver for dense symmetric matrices with the
/// SelfAdjointEigenSolver interface. Converges when the off-diagonal
/// Frobenius norm falls below tolerance * ||A||_F.
template <typename MatrixType>
class JacobiEigenSolver {
 public:
  using Scalar = typename MatrixType::Scalar;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  JacobiEigenSolver() = default;
  explicit JacobiEigenSolver(const MatrixType& a) { compute(a); }

  void set_tolerance(Scalar tolerance) { tolerance_ = tolerance; }
  void set_max_sweeps(int sweeps) { max_sweeps_ = sweeps; }

  JacobiEigenSolver& compute(const MatrixType& input) {
    const Eigen::Index n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::Identity(n, n);
    const Scalar threshold = tolerance_ * a.norm();
    sweeps_ = 0;
    info_ = Eigen::NoConvergence;
    while (sweeps_ <= max_sweeps_) {
      if (off_norm(a) <= threshold) {
        info_ = Eigen::Success;
        break;
      }
      if (sweeps_ == max_sweeps_) break;
      for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          if (a(p, q) == Scalar(0)) continue;
          Eigen::JacobiRotation<Scalar> rot;
          rot.makeJacobi(a, p, q);
          a.applyOnTheLeft(p, q, rot.adjoint());
          a.applyOnTheRight(p, q, rot);
          v.applyOnTheRight(p, q, rot);
        }
      }
      ++sweeps_;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
    values_.resize(n);
    vectors_.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      values_(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
      vectors_.col(i) = v.col(order[static_cast<std::size_t>(i)]);
    }
    return *this;
  }

  Eigen::ComputationInfo info() const noexcept { return info_; }
  const Vector& eigenvalues() const noexcept { return values_; }
  const Matrix& eigenvectors() const noexcept { return vectors_; }
  int sweeps() const noexcept { return sweeps_; }

 private:
  // Summed directly; norm minus diagonal norm cancels to ~sqrt(eps) * |A|.
  static Scalar off_norm(const Matrix& a) {
    Scalar sum(0);
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      sum += a.col(j).head(j).squaredNorm() + a.col(j).tail(a.rows() - j - 1).squaredNorm();
    }
    return std::sqrt(sum);
  }

  Scalar tolerance_ = Scalar(1e-12);
  int max_sweeps_ = 60;
  int sweeps_ = 0;
  Eigen::ComputationInfo info_ = Eigen::NoConvergence;
  Vector values_;
  Matrix vectors_;
};

enum class EigenSolverKind { kEigen, kJacobi };

struct SpectrumOptions {
  int s_points = 101;
  int levels = 15;
  bool snapshots = false;
  EigenSolverKind solver = EigenSolverKind::kEigen;
  double degeneracy_tolerance = 1e-9;
};

template <typename Scalar_>
struct SpectrumTrace {
  using Scalar = Scalar_;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  std::vector<Scalar> s_grid;
  /// One row per grid point, lowest `levels` eigenvalues ascending.
  Matrix eigenvalues;
  /// Gap from E0 to the first level above E0 + tolerance (NaN if none).
  std::vector<Scalar> gaps;
  /// Ground-level multiplicity at each grid point.
  std::vector<int> ground_degeneracy;
  /// |<1|dH/ds|0>|, taken as the norm of the projection onto the first
  /// excited level. NaN where the ground level is degenerate.
  std::vector<Scalar> epsilons;

  Scalar g_min = std::numeric_limits<Scalar>::quiet_NaN();
  Eigen::Index g_min_index = -1;
  /// Minimum gap over grid points strictly inside (0, 1).
  Scalar g_min_interior = std::numeric_limits<Scalar>::quiet_NaN();
  Eigen::Index g_min_interior_index = -1;
  /// Maximum of the finite epsilons over interior grid points.
  Scalar epsilon = std::numeric_limits<Scalar>::quiet_NaN();

  /// Ground-state probabilities |c_b|^2 per grid point, averaged over the
  /// ground level when it is degenerate. Empty unless requested.
  std::vector<Vector> snapshots;

  bool degenerate_at(std::size_t point) const { return ground_degeneracy.at(point) > 1; }
};

namespace detail {

template <typename Scalar>
struct Eigenpairs {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
};

std::string format_s(double s);

template <typename Scalar>
Eigenpairs<Scalar> diagonalize(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& h,
                               EigenSolverKind kind, Scalar s) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigenpairs<Scalar> out;
  Eigen::ComputationInfo info;
  if (kind == EigenSolverKind::kJacobi) {
    JacobiEigenSolver<Matrix> solver(h);
    info = solver.info();
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    info = solver.info();
    if (info == Eigen::Success) {
      out.values = solver.eigenvalues();
      out.vectors = solver.eigenvectors();
    }
  }
  if (info != Eigen::Success) {
    throw Error(ErrorKind::kConvergence,
                "eigensolver did not converge at s = " + format_s(static_cast<double>(s)));
  }
  return out;
}

}  // namespace detail

template <typename Scalar>
SpectrumTrace<Scalar> spectrum_trace(const SpinHamiltonian<Scalar>& h,
                                     const SpectrumOptions& options = {}) {
  using Trace = SpectrumTrace<Scalar>;
  using Vector = typename Trace::Vector;
  const Eigen::Index dim = h.dimension();
  if (options.s_points < 2) {
    throw Error(ErrorKind::kInvalidArgument, "spectrum needs at least 2 grid points");
  }
  if (options.levels < 1 || options.levels > dim) {
    throw Error(ErrorKind::kInvalidArgument,
                "levels must lie in 1.." + std::to_string(dim) + ", got " +
                    std::to_string(options.levels));
  }
  const auto points = static_cast<std::size_t>(options.s_points);
  const Scalar tol = static_cast<Scalar>(options.degeneracy_tolerance);
  const Scalar nan = std::numeric_limits<Scalar>::quiet_NaN();

  Trace trace;
  trace.s_grid.resize(points);
  for (std::size_t k = 0; k < points; ++k) {
    trace.s_grid[k] = k + 1 == points ? Scalar(1) : Scalar(k) / Scalar(points - 1);
  }
  trace.eigenvalues.resize(options.s_points, options.levels);
  trace.gaps.assign(points, nan);
  trace.ground_degeneracy.assign(points, 1);
  trace.epsilons.assign(points, nan);
  if (options.snapshots) trace.snapshots.assign(points, Vector());

  const auto derivative = h.derivative();
  parallel_for(points, [&](std::size_t k) {
    const Scalar s = trace.s_grid[k];
    const auto pairs = detail::diagonalize<Scalar>(h.interpolate(s), options.solver, s);
    trace.eigenvalues.row(static_cast<Eigen::Index>(k)) = pairs.values.head(options.levels);

    const Scalar e0 = pairs.values(0);
    Eigen::Index ground = 1;
    while (ground < dim && pairs.values(ground) <= e0 + tol) ++ground;
    trace.ground_degeneracy[k] = static_cast<int>(ground);
    if (ground < dim) {
      trace.gaps[k] = pairs.values(ground) - e0;
      if (ground == 1) {
        Eigen::Index excited = 1;
        const Scalar e1 = pairs.values(1);
        while (excited < dim && pairs.values(excited) <= e1 + tol) ++excited;
        const Vector coupling = derivative * pairs.vectors.col(0);
        trace.epsilons[k] = (pairs.vectors.middleCols(1, excited - 1).transpose() * coupling).norm();
      }
    }
    if (options.snapshots) {
      trace.snapshots[k] =
          pairs.vectors.leftCols(ground).array().square().rowwise().sum() / Scalar(ground);
    }
  });

  for (std::size_t k = 0; k < points; ++k) {
    const Scalar gap = trace.gaps[k];
    if (std::isnan(gap)) continue;
    const auto index = static_cast<Eigen::Index>(k);
    if (trace.g_min_index < 0 || gap < trace.g_min) {
      trace.g_min = gap;
      trace.g_min_index = index;
    }
    if (k == 0 || k + 1 == points) continue;
    if (trace.g_min_interior_index < 0 || gap < trace.g_min_interior) {
      trace.g_min_interior = gap;
      trace.g_min_interior_index = index;
    }
    const Scalar eps = trace.epsilons[k];
    if (!std::isnan(eps) && (std::isnan(trace.epsilon) || eps > trace.epsilon)) {
      trace.epsilon = eps;
    }
  }
  return trace;
}

template <typename Scalar>
std::vector<typename SpinHamiltonian<Scalar>::Vector> ground_snapshots(
    const SpinHamiltonian<Scalar>& h, int s_points,
    EigenSolverKind solver = EigenSolverKind::kEigen) {
  SpectrumOptions options;
  options.s_points = s_points;
  options.levels = 1;
  options.snapshots = true;
  options.solver = solver;
  return spectrum_trace(h, options).snapshots;
}

extern template class SpinHamiltonian<double>;
extern template class JacobiEigenSolver<Eigen::MatrixXd>;
extern template SpinHamiltonian<double> to_spin_hamiltonian<double>(const PseudoBoolean&, int);
extern template SpectrumTrace<double> spectrum_trace<double>(const SpinHamiltonian<double>&,
                                                             const SpectrumOptions&);

}  // namespace hpaqc
