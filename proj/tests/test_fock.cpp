#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polyosc/errors.hpp>
#include <polyosc/fock.hpp>
#include <polyosc/poly.hpp>
#include <polyosc/system.hpp>

#include <cmath>
#include <vector>

using namespace polyosc;

namespace {

SystemSpec aniso(int l1, int l2) {
  return make_system(SystemKind::Anisotropic, l1, l2, std::nullopt);
}

template <typename Scalar>
Scalar masked_norm(const Eigen::SparseMatrix<Scalar>& mat,
                   const std::vector<int>& mask) {
  Scalar worst = 0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> unit(mat.cols());
  for (int col : mask) {
    unit.setZero();
    unit(col) = 1;
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> image = mat * unit;
    worst = std::max(worst, image.norm());
  }
  return worst;
}

}  // namespace

TEST_CASE("basis enumerates occupation pairs in row-major order") {
  const FockBasis small = build_basis(1, 1);
  REQUIRE(small.size() == 4);
  CHECK(small.index(0, 0) == 0);
  CHECK(small.index(0, 1) == 1);
  CHECK(small.index(1, 0) == 2);
  CHECK(small.index(1, 1) == 3);
  CHECK(small.state(2).first == 1);
  CHECK(small.state(2).second == 0);

  CHECK(build_basis(40, 40).size() == 1681);
  CHECK(build_basis(3, 7).size() == 32);
}

TEST_CASE("basis size limits") {
  CHECK_THROWS_AS(build_basis(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_basis(5, 0), std::invalid_argument);
  try {
    build_basis(1500, 1500);
    FAIL("expected a size overflow");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::SizeOverflow);
  }
}

TEST_CASE("single-mode ladder matrices have the textbook entries") {
  const FockBasis basis = build_basis(1, 1);
  const auto lower2 = mode_operator<double>(basis, 2, ModeOpKind::Lower);
  CHECK(lower2.matrix.coeff(basis.index(0, 0), basis.index(0, 1)) ==
        doctest::Approx(1.0));
  CHECK(lower2.matrix.coeff(basis.index(1, 0), basis.index(1, 1)) ==
        doctest::Approx(1.0));
  CHECK(lower2.matrix.norm() == doctest::Approx(std::sqrt(2.0)));

  const FockBasis wide = build_basis(4, 4);
  const auto raise1 = mode_operator<double>(wide, 1, ModeOpKind::Raise);
  CHECK(raise1.matrix.coeff(wide.index(3, 2), wide.index(2, 2)) ==
        doctest::Approx(std::sqrt(3.0)));
  const auto count1 = mode_operator<double>(wide, 1, ModeOpKind::Number);
  CHECK(count1.matrix.coeff(wide.index(3, 2), wide.index(3, 2)) ==
        doctest::Approx(3.0));

  CHECK_THROWS_AS(mode_operator<double>(wide, 3, ModeOpKind::Lower),
                  std::invalid_argument);
}

TEST_CASE("canonical commutators hold away from the cutoff") {
  const FockBasis basis = build_basis(12, 12);
  const auto a1 = mode_operator<double>(basis, 1, ModeOpKind::Lower);
  const auto a1d = mode_operator<double>(basis, 1, ModeOpKind::Raise);
  const auto a2 = mode_operator<double>(basis, 2, ModeOpKind::Lower);
  const auto a2d = mode_operator<double>(basis, 2, ModeOpKind::Raise);

  const std::vector<int> mask = interior_mask(basis, 1, 1);
  Eigen::SparseMatrix<double> canonical = commutator(a1, a1d).matrix;
  for (int col : mask) canonical.coeffRef(col, col) -= 1.0;
  CHECK(masked_norm(canonical, mask) < 1e-12);

  // operators of different modes commute entry for entry
  CHECK(commutator(a1, a2d).matrix.norm() == 0.0);
  CHECK(commutator(a1, a2).matrix.norm() == 0.0);
}

TEST_CASE("interior masks drop states within the margin of the cutoff") {
  const FockBasis basis = build_basis(9, 9);
  CHECK(interior_mask(basis, 0, 0).size() == 100);
  CHECK(interior_mask(basis, 2, 3).size() == 8 * 7);
  CHECK(interior_mask(basis, 1, 1).size() == 81);
  CHECK_THROWS_AS(interior_mask(basis, -1, 0), std::invalid_argument);
  try {
    interior_mask(basis, 10, 0);
    FAIL("expected an empty mask");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::EmptyMask);
  }
}

TEST_CASE("ladder operators transfer quanta between the modes") {
  const FockBasis basis = build_basis(10, 10);

  const auto iso = ladder_triple<double>(aniso(1, 1), basis);
  REQUIRE(iso.jplus.mode_shift.has_value());
  CHECK(iso.jplus.mode_shift->first == 1);
  CHECK(iso.jplus.mode_shift->second == -1);
  const auto a1d = mode_operator<double>(basis, 1, ModeOpKind::Raise);
  const auto a2 = mode_operator<double>(basis, 2, ModeOpKind::Lower);
  const Eigen::SparseMatrix<double> delta =
      iso.jplus.matrix - (a1d * a2).matrix;
  CHECK(delta.norm() < 1e-12);

  const auto fl = ladder_triple<double>(aniso(3, 1), basis);
  CHECK(fl.jplus.mode_shift->first == 1);
  CHECK(fl.jplus.mode_shift->second == -3);
  CHECK(fl.jminus.mode_shift->first == -1);
  CHECK(fl.jminus.mode_shift->second == 3);
  // <(1,0)| J+ |(0,3)> = sqrt(1 * 3!)
  CHECK(fl.jplus.matrix.coeff(basis.index(1, 0), basis.index(0, 3)) ==
        doctest::Approx(std::sqrt(6.0)));

  const auto higgs = ladder_triple<double>(aniso(2, 2), basis);
  CHECK(higgs.j0.matrix.coeff(basis.index(3, 1), basis.index(3, 1)) ==
        doctest::Approx(0.5));  // (n1 - n2) / (2 * 2)

  CHECK_THROWS_AS(
      ladder_triple<double>(
          make_system(SystemKind::SWDeformed, 1, 1, Rational(1, 3)), basis),
      Error);
}

TEST_CASE("identity checker accepts true identities and flags planted faults") {
  const FockBasis basis = build_basis(20, 20);
  const auto ops = ladder_triple<double>(aniso(3, 1), basis);
  const std::vector<int> mask = interior_mask(basis, 1, 3);

  const auto good =
      check_identity(commutator(ops.j0, ops.jplus), ops.jplus, mask, 1e-10);
  CHECK(good.pass);
  CHECK(good.max_residual < 1e-12);

  SparseOperator<double> bent = ops.jplus;
  bent.matrix.coeffRef(0, 0) += 1e-3;
  const auto bad =
      check_identity(commutator(ops.j0, ops.jplus), bent, mask, 1e-10);
  CHECK(!bad.pass);
  CHECK(bad.max_residual == doctest::Approx(1e-3).epsilon(1e-3));
}

TEST_CASE("identity checker rejects mismatched dimensions") {
  const FockBasis small = build_basis(5, 5);
  const FockBasis large = build_basis(6, 6);
  const auto ops_small = ladder_triple<double>(aniso(1, 1), small);
  const auto ops_large = ladder_triple<double>(aniso(1, 1), large);
  try {
    check_identity(ops_small.j0, ops_large.j0, interior_mask(small, 1, 1),
                   1e-9);
    FAIL("expected a dimension mismatch");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("hamiltonian commutes with the ladder operators") {
  const FockBasis basis = build_basis(40, 40);
  for (const auto& sys :
       {aniso(1, 1), aniso(2, 1), aniso(3, 1), aniso(2, 2), aniso(3, 2)}) {
    const auto ops = ladder_triple<double>(sys, basis);
    const std::vector<int> mask = interior_mask(basis, sys.l2, sys.l1);
    const SparseOperator<double> zero{
        Eigen::SparseMatrix<double>(basis.size(), basis.size()),
        std::nullopt};
    CHECK(check_identity(commutator(ops.h, ops.jplus), zero, mask, 1e-10).pass);
    CHECK(check_identity(commutator(ops.h, ops.jminus), zero, mask, 1e-10).pass);
  }
}

TEST_CASE("ladder products reproduce the structure function on the diagonal") {
  using Scalar = long double;
  const FockBasis basis = build_basis(40, 40);
  for (const auto& sys :
       {aniso(1, 1), aniso(2, 1), aniso(3, 1), aniso(2, 2), aniso(3, 2)}) {
    const auto ops = ladder_triple<Scalar>(sys, basis);
    const BivarPoly phi = expand(structure_function(sys));
    const std::vector<int> mask =
        interior_mask(basis, 2 * sys.l2, 2 * sys.l1);
    const auto diag = polynomial_diagonal<Scalar>(basis, sys, phi);
    CHECK(check_identity(ops.jplus * ops.jminus, diag, mask, 1e-9).pass);
    const auto diag_up =
        polynomial_diagonal<Scalar>(basis, sys, phi.shifted_m(1));
    CHECK(check_identity(ops.jminus * ops.jplus, diag_up, mask, 1e-9).pass);
  }
}

TEST_CASE("state quantum numbers are exact rationals") {
  const auto higgs = aniso(2, 2);
  CHECK(state_m(higgs, 3, 1) == Rational(1, 2));
  CHECK(state_m(higgs, 0, 0) == Rational(0));
  const auto sys = aniso(3, 2);
  CHECK(state_energy(sys, 1, 0) == Rational(11, 2));
  CHECK(state_energy(sys, 0, 0) == Rational(5, 2));
  CHECK(state_m(sys, 1, 0) == Rational(1, 4));
}
