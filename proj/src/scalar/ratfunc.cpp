#include "qsym/scalar/ratfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace qsym {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::r() { return RatFunc(Poly::x(), Poly(1)); }
RatFunc RatFunc::delta() { return RatFunc(Poly::monomial(1, 2), Poly(1)); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  if (den_.lead() != 1) {
    Rational s = 1 / den_.lead();
    num_ *= s;
    den_ *= s;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(den_, num_);
}

double RatFunc::eval_r(double r0) const {
  double d = den_.eval(r0);
  if (d == 0.0) throw std::domain_error("rational function pole at evaluation point");
  return num_.eval(r0) / d;
}

Rational RatFunc::eval_r(const Rational& r0) const {
  Rational d = den_.eval(r0);
  if (d == 0) throw std::domain_error("rational function pole at evaluation point");
  return num_.eval(r0) / d;
}

double RatFunc::eval_delta(double d0) const { return eval_r(std::sqrt(d0)); }

std::string RatFunc::str() const {
  if (den_ == Poly(1)) return num_.str("r");
  return "(" + num_.str("r") + ")/(" + den_.str("r") + ")";
}

}  // namespace qsym
