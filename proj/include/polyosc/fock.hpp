#ifndef POLYOSC_FOCK_HPP
#define POLYOSC_FOCK_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "polyosc/errors.hpp"
#include "polyosc/poly.hpp"
#include "polyosc/system.hpp"

namespace polyosc {

// Rectangular two-mode Fock truncation 0 <= n_i <= n_i_max, row-major
// state order: index = n1*(n2_max+1) + n2.
class FockBasis {
 public:
  FockBasis(int n1_max, int n2_max);

  int n1_max() const { return n1_max_; }
  int n2_max() const { return n2_max_; }
  int size() const { return (n1_max_ + 1) * (n2_max_ + 1); }

  int index(int n1, int n2) const { return n1 * (n2_max_ + 1) + n2; }
  std::pair<int, int> state(int index) const {
    return {index / (n2_max_ + 1), index % (n2_max_ + 1)};
  }

  static constexpr std::int64_t kDimensionCap = 1000000;

 private:
  int n1_max_;
  int n2_max_;
};

FockBasis build_basis(int n1_max, int n2_max);

// Indices of states at least (margin1, margin2) away from the truncation
// edge; images of these states under operators shifting occupations by at
// most the margins stay inside the basis, so identities are exact there.
std::vector<int> interior_mask(const FockBasis& basis, int margin1,
                               int margin2);

enum class ModeOpKind { Lower, Raise, Number };

template <typename Scalar>
struct SparseOperator {
  Eigen::SparseMatrix<Scalar> matrix;
  // (dn1, dn2) applied to every connected state, present for monomials.
  std::optional<std::pair<int, int>> mode_shift;
};

template <typename Scalar>
SparseOperator<Scalar> operator*(const SparseOperator<Scalar>& x,
                                 const SparseOperator<Scalar>& y) {
  SparseOperator<Scalar> out;
  out.matrix = x.matrix * y.matrix;
  if (x.mode_shift && y.mode_shift) {
    out.mode_shift = {x.mode_shift->first + y.mode_shift->first,
                      x.mode_shift->second + y.mode_shift->second};
  }
  return out;
}

template <typename Scalar>
SparseOperator<Scalar> operator+(const SparseOperator<Scalar>& x,
                                 const SparseOperator<Scalar>& y) {
  SparseOperator<Scalar> out;
  out.matrix = x.matrix + y.matrix;
  if (x.mode_shift && y.mode_shift && *x.mode_shift == *y.mode_shift)
    out.mode_shift = x.mode_shift;
  return out;
}

template <typename Scalar>
SparseOperator<Scalar> operator-(const SparseOperator<Scalar>& x,
                                 const SparseOperator<Scalar>& y) {
  SparseOperator<Scalar> out;
  out.matrix = x.matrix - y.matrix;
  if (x.mode_shift && y.mode_shift && *x.mode_shift == *y.mode_shift)
    out.mode_shift = x.mode_shift;
  return out;
}

template <typename Scalar>
SparseOperator<Scalar> operator*(Scalar c, const SparseOperator<Scalar>& x) {
  SparseOperator<Scalar> out;
  out.matrix = c * x.matrix;
  out.mode_shift = x.mode_shift;
  return out;
}

template <typename Scalar>
SparseOperator<Scalar> commutator(const SparseOperator<Scalar>& x,
                                  const SparseOperator<Scalar>& y) {
  return x * y - y * x;
}

template <typename Scalar>
SparseOperator<Scalar> anticommutator(const SparseOperator<Scalar>& x,
                                      const SparseOperator<Scalar>& y) {
  return x * y + y * x;
}

// Single-mode ladder/number operator embedded in the two-mode basis.
// Lower: <n-1|a|n> = sqrt(n); Raise: <n+1|a†|n> = sqrt(n+1); Number: diag n.
template <typename Scalar>
SparseOperator<Scalar> mode_operator(const FockBasis& basis, int mode,
                                     ModeOpKind kind) {
  if (mode != 1 && mode != 2)
    throw std::invalid_argument("mode must be 1 or 2");
  using Triplet = Eigen::Triplet<Scalar>;
  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(basis.size()));
  const int dim = basis.size();
  for (int idx = 0; idx < dim; ++idx) {
    auto [n1, n2] = basis.state(idx);
    const int n = (mode == 1) ? n1 : n2;
    switch (kind) {
      case ModeOpKind::Lower:
        if (n > 0) {
          const int target = (mode == 1) ? basis.index(n1 - 1, n2)
                                         : basis.index(n1, n2 - 1);
          triplets.emplace_back(target, idx,
                                std::sqrt(static_cast<Scalar>(n)));
        }
        break;
      case ModeOpKind::Raise: {
        const int up = n + 1;
        const int up_max = (mode == 1) ? basis.n1_max() : basis.n2_max();
        if (up <= up_max) {
          const int target = (mode == 1) ? basis.index(n1 + 1, n2)
                                         : basis.index(n1, n2 + 1);
          triplets.emplace_back(target, idx,
                                std::sqrt(static_cast<Scalar>(up)));
        }
        break;
      }
      case ModeOpKind::Number:
        if (n > 0) triplets.emplace_back(idx, idx, static_cast<Scalar>(n));
        break;
    }
  }
  SparseOperator<Scalar> out;
  out.matrix.resize(dim, dim);
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());
  const int dn = (kind == ModeOpKind::Lower)   ? -1
                 : (kind == ModeOpKind::Raise) ? +1
                                               : 0;
  out.mode_shift = (mode == 1) ? std::make_pair(dn, 0) : std::make_pair(0, dn);
  return out;
}

// Diagonal operator with entries given per basis state.
template <typename Scalar, typename Fn>
SparseOperator<Scalar> diagonal_operator(const FockBasis& basis, Fn&& entry) {
  using Triplet = Eigen::Triplet<Scalar>;
  std::vector<Triplet> triplets;
  const int dim = basis.size();
  triplets.reserve(static_cast<std::size_t>(dim));
  for (int idx = 0; idx < dim; ++idx) {
    auto [n1, n2] = basis.state(idx);
    const Scalar v = entry(n1, n2);
    if (v != Scalar(0)) triplets.emplace_back(idx, idx, v);
  }
  SparseOperator<Scalar> out;
  out.matrix.resize(dim, dim);
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());
  out.mode_shift = std::make_pair(0, 0);
  return out;
}

// Exact ladder label and energy of a basis state, in w0 units.
Rational state_m(const SystemSpec& sys, int n1, int n2);
Rational state_energy(const SystemSpec& sys, int n1, int n2);

// Diagonal matrix of an exact (m, E) polynomial evaluated state by state;
// the only rounding is the final conversion to Scalar.
template <typename Scalar>
SparseOperator<Scalar> polynomial_diagonal(const FockBasis& basis,
                                           const SystemSpec& sys,
                                           const BivarPoly& poly) {
  return diagonal_operator<Scalar>(basis, [&](int n1, int n2) {
    const AlgScalar value = poly.eval(AlgScalar(state_m(sys, n1, n2)),
                                      AlgScalar(state_energy(sys, n1, n2)));
    return static_cast<Scalar>(value.to_long_double());
  });
}

template <typename Scalar>
struct LadderOps {
  SparseOperator<Scalar> j0;
  SparseOperator<Scalar> jplus;
  SparseOperator<Scalar> jminus;
  SparseOperator<Scalar> h;
};

// J+ = (a1†)^l2 (a2)^l1, J- its adjoint, J0 = (N1/l2 - N2/l1)/2, H diagonal.
// Matrix elements are assembled directly (single square root per entry).
template <typename Scalar>
LadderOps<Scalar> ladder_triple(const SystemSpec& sys,
                                const FockBasis& basis) {
  if (sys.kind != SystemKind::Anisotropic)
    throw Error(Errc::UnsupportedSystem,
                "ladder_triple covers the anisotropic oscillator only; the "
                "deformed mode-2 factor lives on the half-line grid");
  const int l1 = sys.l1;
  const int l2 = sys.l2;

  LadderOps<Scalar> ops;
  ops.j0 = diagonal_operator<Scalar>(basis, [&](int n1, int n2) {
    return static_cast<Scalar>(to_long_double(state_m(sys, n1, n2)));
  });
  ops.h = diagonal_operator<Scalar>(basis, [&](int n1, int n2) {
    return static_cast<Scalar>(to_long_double(state_energy(sys, n1, n2)));
  });

  using Triplet = Eigen::Triplet<Scalar>;
  std::vector<Triplet> up;
  std::vector<Triplet> down;
  const int dim = basis.size();
  for (int idx = 0; idx < dim; ++idx) {
    auto [n1, n2] = basis.state(idx);
    if (n2 < l1 || n1 + l2 > basis.n1_max()) continue;
    // amplitude^2 = (n1+1)...(n1+l2) * n2(n2-1)...(n2-l1+1)
    Scalar amp2 = 1;
    for (int t = 1; t <= l2; ++t) amp2 *= static_cast<Scalar>(n1 + t);
    for (int t = 0; t < l1; ++t) amp2 *= static_cast<Scalar>(n2 - t);
    const Scalar amp = std::sqrt(amp2);
    const int target = basis.index(n1 + l2, n2 - l1);
    up.emplace_back(target, idx, amp);
    down.emplace_back(idx, target, amp);
  }
  ops.jplus.matrix.resize(dim, dim);
  ops.jplus.matrix.setFromTriplets(up.begin(), up.end());
  ops.jplus.mode_shift = std::make_pair(l2, -l1);
  ops.jminus.matrix.resize(dim, dim);
  ops.jminus.matrix.setFromTriplets(down.begin(), down.end());
  ops.jminus.mode_shift = std::make_pair(-l2, l1);
  return ops;
}

struct IdentityReport {
  double max_residual = 0;
  bool pass = false;
};

// Max over masked columns of the full-column 2-norm of (lhs - rhs).
template <typename Scalar>
IdentityReport check_identity(const SparseOperator<Scalar>& lhs,
                              const SparseOperator<Scalar>& rhs,
                              const std::vector<int>& mask, double tol) {
  if (lhs.matrix.rows() != rhs.matrix.rows() ||
      lhs.matrix.cols() != rhs.matrix.cols())
    throw Error(Errc::DimensionMismatch,
                "operators act on different bases");
  Eigen::SparseMatrix<Scalar> diff = lhs.matrix - rhs.matrix;
  Scalar worst = 0;
  for (int col : mask) {
    Scalar sq = 0;
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(diff, col);
         it; ++it)
      sq += it.value() * it.value();
    worst = std::max(worst, sq);
  }
  IdentityReport report;
  report.max_residual = static_cast<double>(std::sqrt(worst));
  report.pass = report.max_residual < tol;
  return report;
}

}  // namespace polyosc

#endif
