#ifndef POLYOSC_POLY_HPP
#define POLYOSC_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyosc/scalar.hpp"
#include "polyosc/system.hpp"

namespace polyosc {

// Linear form  m_coeff*m + e_coeff*E + constant  in the ladder label m and
// the energy E (both in w0 units).
struct LinearFactor {
  Rational m_coeff;
  Rational e_coeff;
  AlgScalar constant;
};

AlgScalar eval(const LinearFactor& f, const AlgScalar& m, const AlgScalar& e);

// lead * product of linear factors; the factored form of the structure
// function phi(m, E) with J+J- = phi(J0, H) and J-J+ = phi(J0+1, H).
struct FactoredPoly {
  AlgScalar lead = AlgScalar(1);
  std::vector<LinearFactor> factors;
};

AlgScalar eval(const FactoredPoly& p, const AlgScalar& m, const AlgScalar& e);

// Exact bivariate polynomial in (m, E). Zero coefficients are never stored,
// so term maps compare directly.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;  // (power of m, power of E)

  BivarPoly() = default;
  static BivarPoly constant(const AlgScalar& c);
  static BivarPoly linear(const LinearFactor& f);

  const std::map<Key, AlgScalar>& terms() const { return terms_; }
  AlgScalar coeff(int m_power, int e_power) const;
  void add_term(int m_power, int e_power, const AlgScalar& c);

  bool is_zero() const { return terms_.empty(); }
  int deg_m() const;
  int deg_e() const;

  friend BivarPoly operator+(const BivarPoly& x, const BivarPoly& y);
  friend BivarPoly operator-(const BivarPoly& x, const BivarPoly& y);
  friend BivarPoly operator*(const BivarPoly& x, const BivarPoly& y);

  friend bool operator==(const BivarPoly& x, const BivarPoly& y);
  friend bool operator!=(const BivarPoly& x, const BivarPoly& y) {
    return !(x == y);
  }

  // Substitution m -> m + delta.
  BivarPoly shifted_m(const Rational& delta) const;

  // Coefficient of m^power, as a polynomial in E alone.
  BivarPoly m_coefficient(int power) const;

  AlgScalar eval(const AlgScalar& m, const AlgScalar& e) const;

  // Numeric evaluation; Scalar is double or long double.
  template <typename Scalar>
  Scalar eval_approx(Scalar m, Scalar e) const {
    Scalar sum = 0;
    for (const auto& [key, c] : terms_) {
      Scalar term = static_cast<Scalar>(c.to_long_double());
      for (int i = 0; i < key.first; ++i) term *= m;
      for (int i = 0; i < key.second; ++i) term *= e;
      sum += term;
    }
    return sum;
  }

  // Human-readable form, terms ordered by descending m power then
  // descending E power, e.g. "108*m^3 + (-27*E + 54)*m^2 + ...".
  std::string to_string() const;

 private:
  std::map<Key, AlgScalar> terms_;
};

BivarPoly expand(const FactoredPoly& p);

// Structure function phi for the system, as an explicit product of linear
// factors. Anisotropic: l1+l2 factors, all-rational coefficients.
// SWDeformed: 2(l1+l2) factors; the mode-2 factor constants live in Q(s).
FactoredPoly structure_function(const SystemSpec& sys);

// P(m; E) = phi(m, E) - phi(m+1, E), the polynomial with [J+, J-] = P(J0; H).
BivarPoly commutator_polynomial(const FactoredPoly& phi);

// Decomposition  phi(m) + phi(m+1) = casimir(E) - sum_{i>=1} alpha[i](E)*m^i,
// normalized so that the alpha sum has no constant term. Then
// C = {J+, J-} + sum_i alpha[i](H) J0^i acts as casimir(H) on every state.
struct CasimirSplit {
  std::vector<BivarPoly> alpha;  // index = power of m; alpha[0] is zero
  BivarPoly casimir;             // polynomial in E only
};

CasimirSplit casimir_split(const FactoredPoly& phi);

std::string to_string(const LinearFactor& f);
std::string to_string(const FactoredPoly& p);

}  // namespace polyosc

#endif
