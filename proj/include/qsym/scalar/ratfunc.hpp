#pragma once

#include <string>

#include "qsym/scalar/poly.hpp"

namespace qsym {

/// Element of Q(r), the field of rational functions in one variable.
/// The loop parameter is delta = r^2, so 1/sqrt(delta) = 1/r stays exact.
/// Stored as num/den with gcd 1 and monic den.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& q) : num_(q), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long q) : RatFunc(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  static RatFunc r();
  static RatFunc delta();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  /// Evaluate at r = r0; throws if the denominator vanishes.
  double eval_r(double r0) const;
  Rational eval_r(const Rational& r0) const;
  /// Evaluate at delta = d0 (r = sqrt(d0)).
  double eval_delta(double d0) const;

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace qsym
