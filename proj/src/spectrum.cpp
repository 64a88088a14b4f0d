#include "polyosc/spectrum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "polyosc/errors.hpp"

namespace polyosc {

AlgScalar energy_at(const EnergyFamily& f, int n) {
  return f.base + AlgScalar(f.step * n);
}

AlgScalar lowest_weight_at(const EnergyFamily& f, int n) {
  return f.m_lowest_base + AlgScalar(f.m_lowest_step * n);
}

namespace {

// base reduced mod step, for the duplicate key
AlgScalar base_mod_step(const AlgScalar& base, const Rational& step) {
  const AlgScalar ratio = base / step;
  const Rational f(ratio.floor());
  return base - AlgScalar(f * step);
}

std::optional<FamilyLabel> family_label(const SystemSpec& sys, int lower,
                                        int upper) {
  FamilyLabel label;
  if (sys.kind == SystemKind::Anisotropic) {
    // lower indexes the mode-1 block [0, l2), upper the mode-2 block
    if (lower >= sys.l2 || upper < sys.l2) return std::nullopt;
    label.i = lower + 1;
    label.j = sys.l1 - (upper - sys.l2);
    label.sector = 0;
    return label;
  }
  if (lower >= 2 * sys.l2 || upper < 2 * sys.l2) return std::nullopt;
  const int g = upper - 2 * sys.l2;
  label.i = lower + 1;          // ladder-bottom mode-1 occupation + 1
  label.j = sys.l1 - g / 2;     // ladder-bottom mode-2 level + 1
  label.sector = (g % 2 == 0) ? +1 : -1;
  return label;
}

}  // namespace

std::vector<EnergyFamily> solve_families(const FactoredPoly& phi,
                                         const SystemSpec& sys) {
  const int count = static_cast<int>(phi.factors.size());
  std::vector<EnergyFamily> kept;
  // dedup key: factor pair plus (base mod step, step)
  std::map<std::tuple<int, int, std::pair<Rational, Rational>, Rational>,
           bool>
      seen;

  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      const LinearFactor& fa = phi.factors[static_cast<std::size_t>(a)];
      const LinearFactor& fb = phi.factors[static_cast<std::size_t>(b)];
      // F_a(m, E) = 0 and F_b(m + k, E) = 0 with k = n + 1:
      //   [cm_a cE_a][m]   [-c0_a      ]
      //   [cm_b cE_b][E] = [-c0_b - cm_b k]
      const Rational det = fa.m_coeff * fb.e_coeff - fa.e_coeff * fb.m_coeff;
      if (det == 0) continue;  // parallel factors, skipped
      const Rational step = -fa.m_coeff * fb.m_coeff / det;
      if (step <= 0) continue;  // energy unbounded below along this branch

      EnergyFamily family;
      family.step = step;
      family.base = (AlgScalar(fb.m_coeff) * fa.constant -
                     AlgScalar(fa.m_coeff) * fb.constant -
                     AlgScalar(fa.m_coeff * fb.m_coeff)) /
                    det;
      family.m_lowest_base = (fb.constant * AlgScalar(fa.e_coeff) -
                              fa.constant * AlgScalar(fb.e_coeff) +
                              AlgScalar(fb.m_coeff * fa.e_coeff)) /
                             det;
      family.m_lowest_step = fb.m_coeff * fa.e_coeff / det;
      family.lower_factor_id = a;
      family.upper_factor_id = b;
      family.label = family_label(sys, a, b);

      // interior positivity of phi along the ladder, exact, n = 0..8
      bool positive = true;
      for (int n = 0; n <= 8 && positive; ++n) {
        const AlgScalar e = energy_at(family, n);
        const AlgScalar m0 = lowest_weight_at(family, n);
        for (int t = 1; t <= n; ++t) {
          if (eval(phi, m0 + AlgScalar(t), e).sign() <= 0) {
            positive = false;
            break;
          }
        }
      }
      if (!positive) continue;

      const AlgScalar reduced = base_mod_step(family.base, family.step);
      const auto key = std::make_tuple(
          a, b,
          std::make_pair(reduced.rational_part(), reduced.root_part()),
          family.step);
      if (seen.emplace(key, true).second) kept.push_back(family);
    }
  }
  if (kept.empty())
    throw Error(Errc::NoFamilies,
                "no factor pair yields a bounded positive-slope ladder");

  std::sort(kept.begin(), kept.end(),
            [](const EnergyFamily& x, const EnergyFamily& y) {
              const int c = AlgScalar::compare(x.base, y.base);
              if (c != 0) return c < 0;
              if (x.step != y.step) return x.step < y.step;
              if (x.lower_factor_id != y.lower_factor_id)
                return x.lower_factor_id < y.lower_factor_id;
              return x.upper_factor_id < y.upper_factor_id;
            });
  return kept;
}

std::vector<EnergyFamily> closed_form_families(const SystemSpec& sys) {
  if (sys.kind != SystemKind::Anisotropic)
    throw Error(Errc::UnsupportedSystem,
                "closed-form families are tabulated for the anisotropic "
                "oscillator only");
  std::vector<EnergyFamily> families;
  families.reserve(static_cast<std::size_t>(sys.l1 * sys.l2));
  for (int i = 1; i <= sys.l2; ++i) {
    for (int j = 1; j <= sys.l1; ++j) {
      EnergyFamily f;
      f.base = AlgScalar(Rational(sys.l1 * (2 * i - 1), 2) +
                         Rational(sys.l2 * (2 * j - 1), 2));
      f.step = Rational(sys.l1 * sys.l2);
      f.label = FamilyLabel{i, j, 0};
      families.push_back(f);
    }
  }
  std::sort(families.begin(), families.end(),
            [](const EnergyFamily& x, const EnergyFamily& y) {
              const int c = AlgScalar::compare(x.base, y.base);
              if (c != 0) return c < 0;
              return std::make_pair(x.label->i, x.label->j) <
                     std::make_pair(y.label->i, y.label->j);
            });
  return families;
}

std::vector<SpectrumLevel> assemble_levels(
    const std::vector<EnergyFamily>& families, const Rational& e_max) {
  if (families.empty())
    throw std::invalid_argument("assemble_levels requires families");
  if (e_max <= 0) throw std::invalid_argument("e_max must be positive");

  const AlgScalar cap(e_max);
  std::map<AlgScalar, SpectrumLevel, AlgScalarLess> merged;
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    const EnergyFamily& f = families[fi];
    for (int n = 0;; ++n) {
      const AlgScalar e = energy_at(f, n);
      if (AlgScalar::compare(e, cap) > 0) break;
      auto& level = merged[e];
      level.energy = e;
      level.total_degeneracy += degeneracy_at(n);
      level.contributors.push_back({static_cast<int>(fi), n});
    }
  }
  std::vector<SpectrumLevel> out;
  out.reserve(merged.size());
  for (auto& [e, level] : merged) out.push_back(std::move(level));
  return out;
}

}  // namespace polyosc
