#include "polyosc/oracle.hpp"

#include <map>
#include <stdexcept>

namespace polyosc {

namespace {

using LevelMap = std::map<AlgScalar, SpectrumLevel, AlgScalarLess>;

void record(LevelMap& levels, const AlgScalar& e) {
  auto& level = levels[e];
  level.energy = e;
  level.total_degeneracy += 1;
}

std::vector<SpectrumLevel> collect(LevelMap& levels) {
  std::vector<SpectrumLevel> out;
  out.reserve(levels.size());
  for (auto& [e, level] : levels) out.push_back(std::move(level));
  return out;
}

}  // namespace

std::vector<SpectrumLevel> enumerate_spectrum(const SystemSpec& sys,
                                              const Rational& e_max) {
  if (e_max <= 0) throw std::invalid_argument("e_max must be positive");
  LevelMap levels;
  const AlgScalar cap(e_max);

  if (sys.kind == SystemKind::Anisotropic) {
    for (int n1 = 0;; ++n1) {
      const Rational e1(sys.l1 * (2 * n1 + 1), 2);
      if (e1 + Rational(sys.l2, 2) > e_max) break;
      for (int n2 = 0;; ++n2) {
        const Rational e = e1 + Rational(sys.l2 * (2 * n2 + 1), 2);
        if (e > e_max) break;
        record(levels, AlgScalar(e));
      }
    }
    return collect(levels);
  }

  const AlgContext ctx = sys.context();
  for (const int sector : {+1, -1}) {
    // mode-2 level: l2 (2k + 1 + sector*s/2)
    const AlgScalar mode2_base(Rational(sys.l2),
                               Rational(sector * sys.l2, 2), ctx);
    for (int n1 = 0;; ++n1) {
      const AlgScalar e1(Rational(sys.l1 * (2 * n1 + 1), 2));
      if (AlgScalar::compare(e1 + mode2_base, cap) > 0) break;
      for (int k = 0;; ++k) {
        const AlgScalar e =
            e1 + mode2_base + AlgScalar(Rational(2 * sys.l2 * k));
        if (AlgScalar::compare(e, cap) > 0) break;
        record(levels, e);
      }
    }
  }
  return collect(levels);
}

std::vector<double> fd_eigenvalues(int l2, const Rational& kappa,
                                   const GridSpec& grid, int count) {
  if (count < 1 || count > 10)
    throw std::invalid_argument("count must be in 1..10");
  const GridOperators ops = grid_mode2(l2, kappa, grid);
  const Eigen::VectorXd values = grid_eigenvalues(ops, count);
  return std::vector<double>(values.data(), values.data() + values.size());
}

SpectrumDiff compare_spectra(const std::vector<SpectrumLevel>& a,
                             const std::vector<SpectrumLevel>& b,
                             double tol) {
  (void)tol;  // energies here are always exact; see header
  SpectrumDiff diff;
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < a.size() && ib < b.size()) {
    const int c = AlgScalar::compare(a[ia].energy, b[ib].energy);
    if (c == 0) {
      if (a[ia].total_degeneracy != b[ib].total_degeneracy)
        diff.degeneracy_mismatches.push_back(
            {a[ia].energy, a[ia].total_degeneracy, b[ib].total_degeneracy});
      ++ia;
      ++ib;
    } else if (c < 0) {
      diff.missing_in_b.push_back(a[ia]);
      ++ia;
    } else {
      diff.missing_in_a.push_back(b[ib]);
      ++ib;
    }
  }
  for (; ia < a.size(); ++ia) diff.missing_in_b.push_back(a[ia]);
  for (; ib < b.size(); ++ib) diff.missing_in_a.push_back(b[ib]);
  diff.pass = diff.missing_in_a.empty() && diff.missing_in_b.empty() &&
              diff.degeneracy_mismatches.empty();
  return diff;
}

}  // namespace polyosc
