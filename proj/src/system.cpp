#include "polyosc/system.hpp"

#include "polyosc/errors.hpp"

namespace polyosc {

Rational SystemSpec::s_squared() const {
  if (kind == SystemKind::Anisotropic) return Rational(1);
  return Rational(1) + 4 * kappa;
}

std::string SystemSpec::name() const {
  const std::string base = "(" + std::to_string(l1) + "," +
                           std::to_string(l2) + ")";
  if (kind == SystemKind::Anisotropic) return "aniso" + base;
  return "sw" + base + " kappa=" + to_string(kappa);
}

SystemSpec make_system(SystemKind kind, int l1, int l2,
                       std::optional<Rational> kappa) {
  if (l1 < 1 || l2 < 1)
    throw Error(Errc::NonPositiveMultiplier,
                "frequency multipliers must be positive integers, got (" +
                    std::to_string(l1) + "," + std::to_string(l2) + ")");
  SystemSpec sys;
  sys.kind = kind;
  sys.l1 = l1;
  sys.l2 = l2;
  if (kind == SystemKind::Anisotropic) {
    if (kappa.has_value())
      throw Error(Errc::UnexpectedKappa,
                  "the anisotropic oscillator takes no barrier strength");
    return sys;
  }
  if (!kappa.has_value())
    throw Error(Errc::KappaOutOfRange,
                "the deformed oscillator requires kappa in (-1/4, 3/4)");
  if (*kappa <= Rational(-1, 4) || *kappa >= Rational(3, 4))
    throw Error(Errc::KappaOutOfRange,
                "kappa = " + to_string(*kappa) +
                    " outside the admissible open interval (-1/4, 3/4)");
  sys.kappa = *kappa;
  return sys;
}

}  // namespace polyosc
