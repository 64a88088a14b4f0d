#include "polyosc/scalar.hpp"

#include <cmath>
#include <stdexcept>

#include "polyosc/errors.hpp"

namespace polyosc {

AlgContext::AlgContext(const Rational& s_squared) : s_squared_(s_squared) {
  if (s_squared <= 0)
    throw std::invalid_argument("s^2 must be positive");
  exact_root_ = exact_sqrt(s_squared);
}

AlgScalar::AlgScalar(const Rational& a, const Rational& b,
                     const AlgContext& ctx)
    : a_(a), b_(b), ctx_(ctx) {
  normalize();
}

void AlgScalar::normalize() {
  if (b_ != 0 && ctx_.trivial()) {
    a_ += b_ * *ctx_.exact_root();
    b_ = 0;
  }
}

const AlgContext& AlgScalar::merge_context(const AlgScalar& x,
                                           const AlgScalar& y) {
  if (x.b_ == 0) return y.ctx_;
  if (y.b_ == 0) return x.ctx_;
  if (x.ctx_ != y.ctx_)
    throw Error(Errc::ContextMismatch,
                "cannot combine scalars with s^2 = " +
                    polyosc::to_string(x.ctx_.s_squared()) + " and s^2 = " +
                    polyosc::to_string(y.ctx_.s_squared()));
  return x.ctx_;
}

AlgScalar operator+(const AlgScalar& x, const AlgScalar& y) {
  const AlgContext& ctx = AlgScalar::merge_context(x, y);
  return AlgScalar(x.a_ + y.a_, x.b_ + y.b_, ctx);
}

AlgScalar operator-(const AlgScalar& x, const AlgScalar& y) {
  const AlgContext& ctx = AlgScalar::merge_context(x, y);
  return AlgScalar(x.a_ - y.a_, x.b_ - y.b_, ctx);
}

AlgScalar operator*(const AlgScalar& x, const AlgScalar& y) {
  const AlgContext& ctx = AlgScalar::merge_context(x, y);
  const Rational& t = ctx.s_squared();
  return AlgScalar(x.a_ * y.a_ + x.b_ * y.b_ * t, x.a_ * y.b_ + x.b_ * y.a_,
                   ctx);
}

AlgScalar AlgScalar::operator-() const {
  AlgScalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

AlgScalar operator/(const AlgScalar& x, const Rational& d) {
  if (d == 0) throw std::invalid_argument("division by zero");
  AlgScalar out = x;
  out.a_ /= d;
  out.b_ /= d;
  return out;
}

int AlgScalar::sign() const {
  // sign of a + b*sqrt(t), t > 0, by exact case analysis
  const int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
  if (b_ == 0) return sa;
  const int sb = b_ > 0 ? 1 : -1;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against b^2 t
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * ctx_.s_squared();
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

int AlgScalar::compare(const AlgScalar& x, const AlgScalar& y) {
  return (x - y).sign();
}

Integer AlgScalar::floor() const {
  if (b_ == 0) return floor_to_integer(a_);
  Integer guess(static_cast<long long>(std::floor(
      static_cast<double>(to_long_double()))));
  while (compare(*this, AlgScalar(Rational(guess + 1))) >= 0) ++guess;
  while (compare(*this, AlgScalar(Rational(guess))) < 0) --guess;
  return guess;
}

long double AlgScalar::to_long_double() const {
  long double value = polyosc::to_long_double(a_);
  if (b_ != 0)
    value += polyosc::to_long_double(b_) *
             std::sqrt(polyosc::to_long_double(ctx_.s_squared()));
  return value;
}

std::string AlgScalar::to_string() const {
  if (b_ == 0) return polyosc::to_string(a_);
  std::string root;
  const Rational mag = b_ > 0 ? b_ : Rational(-b_);
  if (mag == 1) {
    root = "s";
  } else if (numerator(mag) == 1) {
    root = "s/" + denominator(mag).str();
  } else {
    root = polyosc::to_string(mag) + "*s";
  }
  if (a_ == 0) return (b_ > 0 ? "" : "-") + root;
  return polyosc::to_string(a_) + (b_ > 0 ? " + " : " - ") + root;
}

std::string to_string(const AlgScalar& x) { return x.to_string(); }

}  // namespace polyosc
