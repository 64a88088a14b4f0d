#ifndef POLYOSC_GRID_HPP
#define POLYOSC_GRID_HPP

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "polyosc/rational.hpp"

namespace polyosc {

// Uniform Dirichlet grid on (0, x_max): interior points x_k = k*h,
// k = 1..points, spacing h = x_max/(points+1); the wavefunction is pinned
// to zero at x = 0 and x = x_max.
struct GridSpec {
  double x_max = 12.0;
  int points = 2000;

  double spacing() const { return x_max / (points + 1); }

  // x_max = 12/sqrt(l2) keeps the low-lying eigenstate tails below 1e-10.
  static GridSpec defaults_for(int l2);

  // Same x_max with the spacing halved (points -> 2*points + 1).
  GridSpec refined() const { return GridSpec{x_max, 2 * points + 1}; }
};

// Finite-difference realization of the barrier mode:
//   H2 = -D2/2 + l2^2 x^2/2 + kappa/(2 x^2)     (3-point D2)
//   a2 = sqrt(l2/2) x + D1/sqrt(2 l2)           (antisymmetric central D1)
//   A2 = a2^2 - kappa/(2 l2 x^2),  A2† its formal counterpart with -D1.
struct GridOperators {
  GridSpec grid;
  int l2 = 1;
  Eigen::VectorXd x;
  Eigen::SparseMatrix<double> h2;
  Eigen::SparseMatrix<double> a2;
  Eigen::SparseMatrix<double> a2dag;
  // Tridiagonal storage of h2 for the eigensolver.
  Eigen::VectorXd h2_diag;
  Eigen::VectorXd h2_sub;
};

// Validates the grid (GridTooCoarse below 64 points) and kappa
// (KappaOutOfRange outside (-1/4, 3/4)).
GridOperators grid_mode2(int l2, const Rational& kappa, const GridSpec& grid);

// Lowest eigenvalues of the tridiagonal H2, ascending.
// ConvergenceFailure if the solver does not converge.
Eigen::VectorXd grid_eigenvalues(const GridOperators& ops, int count);

// Eigenvector for a computed eigenvalue, via shifted inverse iteration.
Eigen::VectorXd grid_eigenvector(const GridOperators& ops, double eigenvalue);

// Relative residual of ([H2, A2] + 2 l2 A2) psi over the window
// x in [window_lo, window_hi], normalized by the windowed norm of A2 psi.
// The window drops the boundary rows corrupted by truncating the
// differences at the grid edge.
double grid_commutator_residual(const GridOperators& ops,
                                const Eigen::VectorXd& psi, double window_lo,
                                double window_hi);

}  // namespace polyosc

#endif
