#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "qsym/scalar/cyclotomic.hpp"
#include "qsym/scalar/poly.hpp"
#include "qsym/scalar/ratfunc.hpp"

namespace qsym {

using Complex = std::complex<double>;

/// Per-field hooks used by the generic linear algebra and tube engine.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex conj(const Complex& z) { return std::conj(z); }
  static bool is_zero(const Complex& z, double tol) { return std::abs(z) <= tol; }
  static double magnitude(const Complex& z) { return std::abs(z); }
  static Complex from_rational(const Rational& q) { return Complex(q.get_d(), 0.0); }
  static Complex to_complex(const Complex& z) { return z; }
  static std::string str(const Complex& z) {
    std::ostringstream os;
    os.precision(12);
    if (z.imag() == 0.0) os << z.real();
    else os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational conj(const Rational& q) { return q; }
  static bool is_zero(const Rational& q, double) { return q == 0; }
  static double magnitude(const Rational& q) { return q == 0 ? 0.0 : 1.0; }
  static Rational from_rational(const Rational& q) { return q; }
  static Complex to_complex(const Rational& q) { return Complex(q.get_d(), 0.0); }
  static std::string str(const Rational& q) { return q.get_str(); }
};

template <>
struct ScalarTraits<Cyclotomic> {
  static constexpr bool exact = true;
  static Cyclotomic conj(const Cyclotomic& z) { return z.conj(); }
  static bool is_zero(const Cyclotomic& z, double) { return z.is_zero(); }
  static double magnitude(const Cyclotomic& z) { return z.is_zero() ? 0.0 : 1.0; }
  static Cyclotomic from_rational(const Rational& q) { return Cyclotomic(q); }
  static Complex to_complex(const Cyclotomic& z) { return z.to_complex(); }
  static std::string str(const Cyclotomic& z) { return z.str(); }
};

/// Q(r) is treated as a real field: conjugation is the identity.
template <>
struct ScalarTraits<RatFunc> {
  static constexpr bool exact = true;
  static RatFunc conj(const RatFunc& f) { return f; }
  static bool is_zero(const RatFunc& f, double) { return f.is_zero(); }
  static double magnitude(const RatFunc& f) { return f.is_zero() ? 0.0 : 1.0; }
  static RatFunc from_rational(const Rational& q) { return RatFunc(q); }
  static std::string str(const RatFunc& f) { return f.str(); }
};

}  // namespace qsym
