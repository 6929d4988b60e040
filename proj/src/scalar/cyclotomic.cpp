#include "qsym/scalar/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qsym/error.hpp"

namespace qsym {

const Poly& cyclotomic_poly(unsigned n) {
  static std::recursive_mutex mu;
  static std::map<unsigned, Poly> cache;
  if (n == 0) throw InvalidInput("cyclotomic order must be positive");
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly p = Poly::monomial(1, n) - Poly(1);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = Poly::divmod(p, cyclotomic_poly(d)).first;
  return cache.emplace(n, p).first->second;
}

Cyclotomic::Cyclotomic(const Rational& q) : p_(q) {}

Cyclotomic::Cyclotomic(unsigned order, Poly p) : n_(order), p_(std::move(p)) {
  if (order == 0) throw InvalidInput("cyclotomic order must be positive");
  reduce();
}

void Cyclotomic::reduce() {
  const Poly& phi = cyclotomic_poly(n_);
  if (p_.degree() >= phi.degree()) p_ = Poly::divmod(p_, phi).second;
}

Cyclotomic Cyclotomic::zeta(unsigned n, long k) {
  long m = k % static_cast<long>(n);
  if (m < 0) m += n;
  return Cyclotomic(n, Poly::monomial(1, static_cast<std::size_t>(m)));
}

Cyclotomic Cyclotomic::lift(unsigned m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw InvalidInput("cyclotomic lift to a non-multiple order");
  return Cyclotomic(m, p_.substitute_power(m / n_));
}

namespace {
unsigned common(unsigned a, unsigned b) { return std::lcm(a, b); }
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  unsigned m = common(n_, o.n_);
  *this = lift(m);
  p_ += o.lift(m).p_;
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  unsigned m = common(n_, o.n_);
  *this = lift(m);
  p_ -= o.lift(m).p_;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.is_rational()) {
    p_ *= o.rational_part();
    return *this;
  }
  unsigned m = common(n_, o.n_);
  *this = lift(m);
  p_ *= o.lift(m).p_;
  reduce();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  r.p_ = -r.p_;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.p_ == b.p_;
  unsigned m = common(a.n_, b.n_);
  return a.lift(m).p_ == b.lift(m).p_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (is_rational()) return Cyclotomic(Rational(1 / rational_part()));
  Poly g, u, v;
  Poly::xgcd(p_, cyclotomic_poly(n_), g, u, v);
  if (g.degree() != 0) throw ConsistencyError("non-invertible cyclotomic element");
  return Cyclotomic(n_, u);
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  Poly r;
  const auto& c = p_.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::size_t e = k == 0 ? 0 : n_ - k;
    r += Poly::monomial(c[k], e);
  }
  return Cyclotomic(n_, r);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z(0, 0);
  const auto& c = p_.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / n_;
    z += c[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

namespace {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidInput("bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

// One signed monomial: [coef][*]w[^e] or coef.
Cyclotomic parse_term(std::string t, unsigned n) {
  if (t.empty()) throw InvalidInput("empty term in cyclotomic expression");
  auto wpos = t.find('w');
  if (wpos == std::string::npos) return Cyclotomic(parse_rational(t));
  std::string coef = t.substr(0, wpos);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  Rational c = 1;
  if (coef == "-") c = -1;
  else if (coef == "+" || coef.empty()) c = 1;
  else c = parse_rational(coef[0] == '+' ? coef.substr(1) : coef);
  long e = 1;
  std::string rest = t.substr(wpos + 1);
  if (!rest.empty()) {
    if (rest[0] != '^') throw InvalidInput("bad exponent in '" + t + "'");
    e = std::stol(rest.substr(1));
  }
  return Cyclotomic(c) * Cyclotomic::zeta(n, e);
}

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& text, unsigned n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InvalidInput("empty cyclotomic expression");
  Cyclotomic acc(n, Poly());
  std::size_t start = 0;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    bool split = k == s.size() || ((s[k] == '+' || s[k] == '-') && s[k - 1] != '^' && s[k - 1] != '*');
    if (!split) continue;
    std::string term = s.substr(start, k - start);
    if (!term.empty() && term[0] == '+') term = term.substr(1);
    acc += parse_term(term, n);
    start = k;
  }
  return acc;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return rational_part().get_str();
  return p_.str("z" + std::to_string(n_));
}

}  // namespace qsym
