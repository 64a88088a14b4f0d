#include "polyosc/poly.hpp"

#include <sstream>

namespace polyosc {

AlgScalar eval(const LinearFactor& f, const AlgScalar& m, const AlgScalar& e) {
  return AlgScalar(f.m_coeff) * m + AlgScalar(f.e_coeff) * e + f.constant;
}

AlgScalar eval(const FactoredPoly& p, const AlgScalar& m, const AlgScalar& e) {
  AlgScalar out = p.lead;
  for (const auto& f : p.factors) out *= eval(f, m, e);
  return out;
}

BivarPoly BivarPoly::constant(const AlgScalar& c) {
  BivarPoly out;
  out.add_term(0, 0, c);
  return out;
}

BivarPoly BivarPoly::linear(const LinearFactor& f) {
  BivarPoly out;
  out.add_term(1, 0, AlgScalar(f.m_coeff));
  out.add_term(0, 1, AlgScalar(f.e_coeff));
  out.add_term(0, 0, f.constant);
  return out;
}

AlgScalar BivarPoly::coeff(int m_power, int e_power) const {
  const auto it = terms_.find({m_power, e_power});
  return it == terms_.end() ? AlgScalar(0) : it->second;
}

void BivarPoly::add_term(int m_power, int e_power, const AlgScalar& c) {
  if (c.is_zero()) return;
  const Key key{m_power, e_power};
  const auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int BivarPoly::deg_m() const {
  int deg = 0;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.first);
  return deg;
}

int BivarPoly::deg_e() const {
  int deg = 0;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.second);
  return deg;
}

BivarPoly operator+(const BivarPoly& x, const BivarPoly& y) {
  BivarPoly out = x;
  for (const auto& [key, c] : y.terms_)
    out.add_term(key.first, key.second, c);
  return out;
}

BivarPoly operator-(const BivarPoly& x, const BivarPoly& y) {
  BivarPoly out = x;
  for (const auto& [key, c] : y.terms_)
    out.add_term(key.first, key.second, -c);
  return out;
}

BivarPoly operator*(const BivarPoly& x, const BivarPoly& y) {
  BivarPoly out;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_)
      out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  return out;
}

bool operator==(const BivarPoly& x, const BivarPoly& y) {
  // canonical storage: identical term maps iff identical polynomials
  if (x.terms_.size() != y.terms_.size()) return false;
  auto it = x.terms_.begin();
  auto jt = y.terms_.begin();
  for (; it != x.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->second != jt->second) return false;
  }
  return true;
}

BivarPoly BivarPoly::shifted_m(const Rational& delta) const {
  // m^p -> sum_k C(p,k) delta^(p-k) m^k
  BivarPoly out;
  for (const auto& [key, c] : terms_) {
    const int p = key.first;
    Rational binom = 1;
    Rational power = 1;
    // k descending from p: coefficient C(p,k) * delta^(p-k)
    for (int k = p; k >= 0; --k) {
      out.add_term(k, key.second, AlgScalar(binom * power) * c);
      binom = binom * k / (p - k + 1);
      power *= delta;
    }
  }
  return out;
}

BivarPoly BivarPoly::m_coefficient(int power) const {
  BivarPoly out;
  for (const auto& [key, c] : terms_)
    if (key.first == power) out.add_term(0, key.second, c);
  return out;
}

AlgScalar BivarPoly::eval(const AlgScalar& m, const AlgScalar& e) const {
  AlgScalar sum(0);
  for (const auto& [key, c] : terms_) {
    AlgScalar term = c;
    for (int i = 0; i < key.first; ++i) term *= m;
    for (int i = 0; i < key.second; ++i) term *= e;
    sum += term;
  }
  return sum;
}

namespace {

// "E^2", "m*E", "m^3" etc.; empty for the constant term
std::string monomial_text(int m_power, int e_power) {
  std::string out;
  if (m_power > 0) {
    out += "m";
    if (m_power > 1) out += "^" + std::to_string(m_power);
  }
  if (e_power > 0) {
    if (!out.empty()) out += "*";
    out += "E";
    if (e_power > 1) out += "^" + std::to_string(e_power);
  }
  return out;
}

std::string coeff_text(const AlgScalar& c, bool has_monomial) {
  std::string text = c.to_string();
  const bool compound = text.find(' ') != std::string::npos;
  if (compound && has_monomial) text = "(" + text + ")";
  return text;
}

}  // namespace

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending m power, then descending E power
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    const std::string mono = monomial_text(key.first, key.second);
    AlgScalar shown = c;
    if (first) {
      first = false;
    } else if (c.is_rational() && c.sign() < 0) {
      out << " - ";
      shown = -c;
    } else {
      out << " + ";
    }
    const bool unit = shown.is_rational() && shown.rational_part() == 1;
    if (mono.empty()) {
      out << coeff_text(shown, false);
    } else if (unit) {
      out << mono;
    } else {
      out << coeff_text(shown, true) << "*" << mono;
    }
  }
  return out.str();
}

BivarPoly expand(const FactoredPoly& p) {
  BivarPoly out = BivarPoly::constant(p.lead);
  for (const auto& f : p.factors) out = out * BivarPoly::linear(f);
  return out;
}

FactoredPoly structure_function(const SystemSpec& sys) {
  const int l1 = sys.l1;
  const int l2 = sys.l2;
  FactoredPoly phi;
  if (sys.kind == SystemKind::Anisotropic) {
    // N1 = (E - (l1+l2)/2)/(2 l1) + l2 m,  N2 = (E - (l1+l2)/2)/(2 l2) - l1 m
    // phi = prod_{i=0}^{l2-1} (N1 - i) * prod_{j=1}^{l1} (N2 + j)
    phi.factors.reserve(static_cast<std::size_t>(l1 + l2));
    for (int i = 0; i < l2; ++i) {
      LinearFactor f;
      f.m_coeff = l2;
      f.e_coeff = Rational(1, 2 * l1);
      f.constant = AlgScalar(Rational(-(l1 + l2), 4 * l1) - i);
      phi.factors.push_back(f);
    }
    for (int j = 1; j <= l1; ++j) {
      LinearFactor f;
      f.m_coeff = -l1;
      f.e_coeff = Rational(1, 2 * l2);
      f.constant = AlgScalar(Rational(-(l1 + l2), 4 * l2) + j);
      phi.factors.push_back(f);
    }
    return phi;
  }
  // Deformed: with h1 = E/(l1+l2) + 2 l2 m and h2 = E/(l1+l2) - 2 l1 m,
  //   phi = prod_{r=0}^{l2-1} (h1 - 2r - 1/2)(h1 - 2r - 3/2)
  //       * prod_{r=1}^{l1}   (h2 + 2r - 1 - s/2)(h2 + 2r - 1 + s/2).
  // The mode-2 roots come from the lowest-state condition in each sector.
  const AlgContext ctx = sys.context();
  const Rational e_coeff(1, l1 + l2);
  phi.factors.reserve(static_cast<std::size_t>(2 * (l1 + l2)));
  for (int r = 0; r < l2; ++r) {
    for (const int off : {1, 3}) {
      LinearFactor f;
      f.m_coeff = 2 * l2;
      f.e_coeff = e_coeff;
      f.constant = AlgScalar(Rational(-2 * r) - Rational(off, 2));
      phi.factors.push_back(f);
    }
  }
  for (int r = 1; r <= l1; ++r) {
    for (const int sgn : {-1, +1}) {
      LinearFactor f;
      f.m_coeff = -2 * l1;
      f.e_coeff = e_coeff;
      f.constant = AlgScalar(Rational(2 * r - 1), Rational(sgn, 2), ctx);
      phi.factors.push_back(f);
    }
  }
  return phi;
}

BivarPoly commutator_polynomial(const FactoredPoly& phi) {
  const BivarPoly expanded = expand(phi);
  return expanded - expanded.shifted_m(1);
}

CasimirSplit casimir_split(const FactoredPoly& phi) {
  const BivarPoly expanded = expand(phi);
  const BivarPoly sum = expanded + expanded.shifted_m(1);
  CasimirSplit split;
  split.casimir = sum.m_coefficient(0);
  const int deg = sum.deg_m();
  split.alpha.resize(static_cast<std::size_t>(deg) + 1);
  for (int i = 1; i <= deg; ++i) {
    const BivarPoly coeff = sum.m_coefficient(i);
    split.alpha[static_cast<std::size_t>(i)] =
        BivarPoly() - coeff;  // alpha_i = -[m^i](phi(m) + phi(m+1))
  }
  return split;
}

std::string to_string(const LinearFactor& f) {
  BivarPoly p = BivarPoly::linear(f);
  return p.to_string();
}

std::string to_string(const FactoredPoly& p) {
  std::ostringstream out;
  if (!(p.lead.is_rational() && p.lead.rational_part() == 1))
    out << "(" << p.lead.to_string() << ")";
  for (const auto& f : p.factors) out << "(" << to_string(f) << ")";
  return out.str();
}

}  // namespace polyosc
