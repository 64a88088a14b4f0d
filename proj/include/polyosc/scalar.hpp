#ifndef POLYOSC_SCALAR_HPP
#define POLYOSC_SCALAR_HPP

#include <optional>
#include <string>

#include "polyosc/rational.hpp"

namespace polyosc {

// Quadratic extension context: fixes the value of s^2 (a positive rational).
// Scalars from different contexts cannot be mixed unless one side is purely
// rational. When s^2 is a perfect rational square the extension is trivial
// and every scalar is folded onto its rational part, so e.g. 3/2 + s/2 at
// s^2 = 1 compares equal to 2.
class AlgContext {
 public:
  AlgContext() : AlgContext(Rational(1)) {}
  explicit AlgContext(const Rational& s_squared);

  const Rational& s_squared() const { return s_squared_; }
  const std::optional<Rational>& exact_root() const { return exact_root_; }
  bool trivial() const { return exact_root_.has_value(); }

  friend bool operator==(const AlgContext& x, const AlgContext& y) {
    return x.s_squared_ == y.s_squared_;
  }
  friend bool operator!=(const AlgContext& x, const AlgContext& y) {
    return !(x == y);
  }

 private:
  Rational s_squared_;
  std::optional<Rational> exact_root_;
};

// Element a + b*s of Q(s). Kept canonical: b = 0 whenever the context is
// trivial. Rational-only scalars are context-free and combine with anything.
class AlgScalar {
 public:
  AlgScalar() : a_(0), b_(0) {}
  AlgScalar(const Rational& a) : a_(a), b_(0) {}  // NOLINT(runtime/explicit)
  AlgScalar(int a) : a_(a), b_(0) {}              // NOLINT(runtime/explicit)
  AlgScalar(const Rational& a, const Rational& b, const AlgContext& ctx);

  const Rational& rational_part() const { return a_; }
  const Rational& root_part() const { return b_; }
  const AlgContext& context() const { return ctx_; }
  bool is_rational() const { return b_ == 0; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend AlgScalar operator+(const AlgScalar& x, const AlgScalar& y);
  friend AlgScalar operator-(const AlgScalar& x, const AlgScalar& y);
  friend AlgScalar operator*(const AlgScalar& x, const AlgScalar& y);
  AlgScalar operator-() const;

  // Division by a nonzero rational (the only division the algebra needs).
  friend AlgScalar operator/(const AlgScalar& x, const Rational& d);

  AlgScalar& operator+=(const AlgScalar& y) { return *this = *this + y; }
  AlgScalar& operator-=(const AlgScalar& y) { return *this = *this - y; }
  AlgScalar& operator*=(const AlgScalar& y) { return *this = *this * y; }

  friend bool operator==(const AlgScalar& x, const AlgScalar& y) {
    return compare(x, y) == 0;
  }
  friend bool operator!=(const AlgScalar& x, const AlgScalar& y) {
    return compare(x, y) != 0;
  }
  friend bool operator<(const AlgScalar& x, const AlgScalar& y) {
    return compare(x, y) < 0;
  }
  friend bool operator<=(const AlgScalar& x, const AlgScalar& y) {
    return compare(x, y) <= 0;
  }
  friend bool operator>(const AlgScalar& x, const AlgScalar& y) {
    return compare(x, y) > 0;
  }
  friend bool operator>=(const AlgScalar& x, const AlgScalar& y) {
    return compare(x, y) >= 0;
  }

  // Exact three-way comparison of the real values a + b*sqrt(s^2).
  static int compare(const AlgScalar& x, const AlgScalar& y);

  // Sign of the real value: -1, 0 or +1.
  int sign() const;

  Integer floor() const;

  double to_double() const { return static_cast<double>(to_long_double()); }
  long double to_long_double() const;

  std::string to_string() const;

 private:
  // Merged context of two operands; throws ContextMismatch when both carry
  // incompatible nontrivial roots.
  static const AlgContext& merge_context(const AlgScalar& x,
                                         const AlgScalar& y);
  void normalize();

  Rational a_;
  Rational b_;
  AlgContext ctx_;
};

inline AlgScalar operator*(const Rational& c, const AlgScalar& x) {
  return AlgScalar(c) * x;
}

// Strict weak order on exact values, for ordered containers.
struct AlgScalarLess {
  bool operator()(const AlgScalar& x, const AlgScalar& y) const {
    return AlgScalar::compare(x, y) < 0;
  }
};

std::string to_string(const AlgScalar& x);

}  // namespace polyosc

#endif
