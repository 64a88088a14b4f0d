#include "polyosc/grid.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

#include "polyosc/errors.hpp"

namespace polyosc {

GridSpec GridSpec::defaults_for(int l2) {
  GridSpec grid;
  grid.x_max = 12.0 / std::sqrt(static_cast<double>(l2));
  grid.points = 2000;
  return grid;
}

namespace {

void validate(int l2, const Rational& kappa, const GridSpec& grid) {
  if (l2 < 1)
    throw Error(Errc::NonPositiveMultiplier,
                "l2 must be a positive integer");
  if (grid.points < 64)
    throw Error(Errc::GridTooCoarse, std::to_string(grid.points) +
                                         " interior points; need at least 64");
  if (kappa <= Rational(-1, 4) || kappa >= Rational(3, 4))
    throw Error(Errc::KappaOutOfRange,
                "kappa = " + to_string(kappa) +
                    " outside the admissible open interval (-1/4, 3/4)");
}

}  // namespace

GridOperators grid_mode2(int l2, const Rational& kappa,
                         const GridSpec& grid) {
  validate(l2, kappa, grid);
  const int m = grid.points;
  const double h = grid.spacing();
  const double kap = to_double(kappa);
  const double w = static_cast<double>(l2);

  GridOperators ops;
  ops.grid = grid;
  ops.l2 = l2;
  ops.x.resize(m);
  for (int k = 0; k < m; ++k) ops.x[k] = (k + 1) * h;

  using Triplet = Eigen::Triplet<double>;

  // H2 = -D2/2 + w^2 x^2/2 + kappa/(2 x^2); 3-point D2, Dirichlet ends
  std::vector<Triplet> th;
  th.reserve(static_cast<std::size_t>(3 * m));
  ops.h2_diag.resize(m);
  ops.h2_sub.resize(m - 1);
  const double inv_h2 = 1.0 / (h * h);
  for (int k = 0; k < m; ++k) {
    const double x = ops.x[k];
    const double diag = inv_h2 + 0.5 * w * w * x * x + 0.5 * kap / (x * x);
    ops.h2_diag[k] = diag;
    th.emplace_back(k, k, diag);
    if (k + 1 < m) {
      th.emplace_back(k, k + 1, -0.5 * inv_h2);
      th.emplace_back(k + 1, k, -0.5 * inv_h2);
      ops.h2_sub[k] = -0.5 * inv_h2;
    }
  }
  ops.h2.resize(m, m);
  ops.h2.setFromTriplets(th.begin(), th.end());

  // a2 = sqrt(w/2) x + D1/sqrt(2w), antisymmetric central D1
  std::vector<Triplet> ta;
  ta.reserve(static_cast<std::size_t>(3 * m));
  const double xs = std::sqrt(0.5 * w);
  const double ds = 1.0 / (2.0 * h * std::sqrt(2.0 * w));
  for (int k = 0; k < m; ++k) {
    ta.emplace_back(k, k, xs * ops.x[k]);
    if (k + 1 < m) {
      ta.emplace_back(k, k + 1, ds);
      ta.emplace_back(k + 1, k, -ds);
    }
  }
  Eigen::SparseMatrix<double> a(m, m);
  a.setFromTriplets(ta.begin(), ta.end());

  Eigen::SparseMatrix<double> barrier(m, m);
  std::vector<Triplet> tb;
  tb.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k)
    tb.emplace_back(k, k, 0.5 * kap / (w * ops.x[k] * ops.x[k]));
  barrier.setFromTriplets(tb.begin(), tb.end());

  ops.a2 = Eigen::SparseMatrix<double>(a * a) - barrier;
  Eigen::SparseMatrix<double> adag = a.transpose();
  ops.a2dag = Eigen::SparseMatrix<double>(adag * adag) - barrier;
  return ops;
}

Eigen::VectorXd grid_eigenvalues(const GridOperators& ops, int count) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(ops.h2_diag, ops.h2_sub,
                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(Errc::ConvergenceFailure,
                "tridiagonal eigensolver did not converge");
  const int n = std::min<int>(count, static_cast<int>(ops.h2_diag.size()));
  return solver.eigenvalues().head(n);
}

Eigen::VectorXd grid_eigenvector(const GridOperators& ops, double eigenvalue) {
  const int m = ops.grid.points;
  // shifted inverse iteration; the small offset keeps the factorization
  // nonsingular at a converged eigenvalue
  const double shift = eigenvalue + 1e-9 * std::max(1.0, std::abs(eigenvalue));
  Eigen::SparseMatrix<double> shifted = ops.h2;
  for (int k = 0; k < m; ++k) shifted.coeffRef(k, k) -= shift;
  shifted.makeCompressed();

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(shifted);
  if (lu.info() != Eigen::Success)
    throw Error(Errc::ConvergenceFailure, "inverse-iteration factorization");

  Eigen::VectorXd v = Eigen::VectorXd::Ones(m).normalized();
  for (int it = 0; it < 4; ++it) {
    v = lu.solve(v);
    const double norm = v.norm();
    if (!(norm > 0) || !std::isfinite(norm))
      throw Error(Errc::ConvergenceFailure, "inverse iteration broke down");
    v /= norm;
  }
  if (v.sum() < 0) v = -v;
  return v;
}

double grid_commutator_residual(const GridOperators& ops,
                                const Eigen::VectorXd& psi, double window_lo,
                                double window_hi) {
  const Eigen::VectorXd ap = ops.a2 * psi;
  const Eigen::VectorXd res =
      ops.h2 * ap - ops.a2 * (ops.h2 * psi) + 2.0 * ops.l2 * ap;
  double res_sq = 0;
  double ref_sq = 0;
  for (int k = 0; k < ops.grid.points; ++k) {
    if (ops.x[k] < window_lo || ops.x[k] > window_hi) continue;
    res_sq += res[k] * res[k];
    ref_sq += ap[k] * ap[k];
  }
  if (!(ref_sq > 0)) throw Error(Errc::EmptyMask, "window has no support");
  return std::sqrt(res_sq / ref_sq);
}

}  // namespace polyosc
