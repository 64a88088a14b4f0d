#ifndef POLYOSC_SYSTEM_HPP
#define POLYOSC_SYSTEM_HPP

#include <optional>
#include <string>

#include "polyosc/rational.hpp"
#include "polyosc/scalar.hpp"

namespace polyosc {

// Two-dimensional oscillator with commensurate frequencies w1 = l1*w0,
// w2 = l2*w0 (energies are reported in w0 units throughout), optionally
// carrying the kappa/(2 x2^2) barrier on mode 2.
enum class SystemKind {
  Anisotropic,
  SWDeformed,
};

struct SystemSpec {
  SystemKind kind = SystemKind::Anisotropic;
  int l1 = 1;
  int l2 = 1;
  Rational kappa;  // meaningful only for SWDeformed

  // s^2 = 1 + 4*kappa (trivially 1 for Anisotropic).
  Rational s_squared() const;
  AlgContext context() const { return AlgContext(s_squared()); }

  std::string name() const;
};

// Validates and builds a system descriptor.
//   l1, l2 >= 1                      else NonPositiveMultiplier
//   Anisotropic: kappa absent        else UnexpectedKappa
//   SWDeformed: kappa in (-1/4, 3/4) else KappaOutOfRange
SystemSpec make_system(SystemKind kind, int l1, int l2,
                       std::optional<Rational> kappa = std::nullopt);

}  // namespace polyosc

#endif
