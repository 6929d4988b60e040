#pragma once

#include <complex>
#include <string>

#include "qsym/scalar/poly.hpp"

namespace qsym {

/// Cyclotomic polynomial Phi_n (memoized, thread-safe).
const Poly& cyclotomic_poly(unsigned n);

/// Element of Q(zeta_n), zeta_n = exp(2 pi i / n), kept reduced modulo Phi_n.
/// Mixed-order arithmetic lifts both operands to Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long q) : Cyclotomic(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(unsigned order, Poly p);

  /// zeta_n^k
  static Cyclotomic zeta(unsigned n, long k = 1);

  unsigned order() const { return n_; }
  const Poly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_rational() const { return p_.degree() <= 0; }
  Rational rational_part() const { return p_.coeff(0); }

  /// Same element written over Q(zeta_m), m a multiple of order().
  Cyclotomic lift(unsigned m) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inverse() const;
  /// Complex conjugation, zeta -> zeta^-1.
  Cyclotomic conj() const;
  std::complex<double> to_complex() const;

  /// Parses "a+b*w", "-w^2", "1/2", ... with w = zeta_n.
  static Cyclotomic parse(const std::string& text, unsigned n);
  std::string str() const;

 private:
  void reduce();
  unsigned n_ = 1;
  Poly p_;
};

}  // namespace qsym
