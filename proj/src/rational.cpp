#include "polyosc/rational.hpp"

#include <cctype>

namespace polyosc {

namespace {

bool is_integer_token(const std::string& text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) return std::nullopt;
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  const Integer d(den);
  if (d == 0) return std::nullopt;
  return Rational(Integer(num), d);
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

long double to_long_double(const Rational& r) {
  return r.convert_to<long double>();
}

Integer floor_to_integer(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace polyosc
