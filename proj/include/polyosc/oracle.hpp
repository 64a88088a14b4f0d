#ifndef POLYOSC_ORACLE_HPP
#define POLYOSC_ORACLE_HPP

#include <vector>

#include "polyosc/grid.hpp"
#include "polyosc/spectrum.hpp"
#include "polyosc/system.hpp"

namespace polyosc {

// Brute-force spectrum by direct occupation-lattice enumeration.
// Anisotropic: E = l1(n1+1/2) + l2(n2+1/2).
// SWDeformed:  E = l1(n1+1/2) + l2(2k+1 ± s/2), both sectors; energies kept
// exact so sector grouping never aliases. Contributor lists are empty (the
// oracle has no family structure).
std::vector<SpectrumLevel> enumerate_spectrum(const SystemSpec& sys,
                                              const Rational& e_max);

// Lowest `count` finite-difference eigenvalues of the mode-2 Hamiltonian
// (count <= 10). Only the "+" sector is reachable under the Dirichlet
// boundary condition.
std::vector<double> fd_eigenvalues(int l2, const Rational& kappa,
                                   const GridSpec& grid, int count);

struct SpectrumDiff {
  std::vector<SpectrumLevel> missing_in_a;
  std::vector<SpectrumLevel> missing_in_b;
  struct DegeneracyMismatch {
    AlgScalar energy;
    long deg_a = 0;
    long deg_b = 0;
  };
  std::vector<DegeneracyMismatch> degeneracy_mismatches;
  bool pass = false;
};

// Diffs two ascending level lists. Energies are compared exactly (all
// levels carry exact values); degeneracies compared exactly. The tol
// parameter is accepted for interface stability with float-valued level
// sources and is unused on exact inputs.
SpectrumDiff compare_spectra(const std::vector<SpectrumLevel>& a,
                             const std::vector<SpectrumLevel>& b, double tol);

}  // namespace polyosc

#endif
