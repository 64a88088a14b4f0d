#ifndef POLYOSC_SPECTRUM_HPP
#define POLYOSC_SPECTRUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyosc/poly.hpp"
#include "polyosc/scalar.hpp"
#include "polyosc/system.hpp"

namespace polyosc {

// (i, j) index the closed-form anisotropic family
// E = l1*(i - 1/2) + l2*(j - 1/2) + l1*l2*n; for the deformed system i is
// the mode-1 ladder bottom occupation + 1, j the mode-2 level + 1, and
// sector is +1/-1. sector = 0 for anisotropic families.
struct FamilyLabel {
  int i = 0;
  int j = 0;
  int sector = 0;
};

// One bounded ladder family: energies E(n) = base + step*n with exactly n+1
// states at level n (the ladder between the two vanishing factors).
struct EnergyFamily {
  AlgScalar base;
  Rational step;
  int lower_factor_id = -1;
  int upper_factor_id = -1;
  AlgScalar m_lowest_base;  // lowest ladder label at n = 0
  Rational m_lowest_step;   // its increment per unit n
  std::optional<FamilyLabel> label;
};

AlgScalar energy_at(const EnergyFamily& f, int n);
AlgScalar lowest_weight_at(const EnergyFamily& f, int n);
inline long degeneracy_at(int n) { return n + 1; }

// Solves every ordered factor pair (F_a, F_b) of phi for
// F_a(m, E) = 0, F_b(m + n + 1, E) = 0, keeping families with positive
// energy slope and phi > 0 at the interior ladder points (checked exactly
// for n = 0..8). Singular pairs are skipped. Throws NoFamilies when nothing
// survives. Families are returned in canonical order (ascending base, then
// step, then factor ids) and deduplicated by (factor pair, base mod step).
std::vector<EnergyFamily> solve_families(const FactoredPoly& phi,
                                         const SystemSpec& sys);

// The closed-form anisotropic families E_{i,j}(n), i = 1..l2, j = 1..l1,
// used to cross-check solve_families. UnsupportedSystem for SWDeformed.
std::vector<EnergyFamily> closed_form_families(const SystemSpec& sys);

struct LevelContributor {
  int family_index = -1;
  int n = -1;
};

struct SpectrumLevel {
  AlgScalar energy;
  long total_degeneracy = 0;
  std::vector<LevelContributor> contributors;
};

// Merges all (family, n) ladder levels with E <= e_max by exact energy;
// sorted ascending, degeneracies summed.
std::vector<SpectrumLevel> assemble_levels(
    const std::vector<EnergyFamily>& families, const Rational& e_max);

}  // namespace polyosc

#endif
