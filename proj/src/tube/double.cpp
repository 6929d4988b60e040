#include "qsym/tube/double.hpp"

#include <algorithm>
#include <cmath>

#include "qsym/error.hpp"

namespace qsym::tube {

QuantumDouble::QuantumDouble(grp::FiniteGroup g, std::vector<grp::UnitaryIrrep<Complex>> irreps)
    : g_(std::move(g)), irreps_(std::move(irreps)) {
  const std::size_t n = order();
  std::size_t total = 0;
  for (const auto& u : irreps_) {
    if (u.rho.size() != n) throw InvalidInput("irrep " + u.label + " has the wrong number of matrices");
    total += u.degree * u.degree;
  }
  if (total != n) throw InvalidInput("irreps do not exhaust the group algebra");
  // lambda_g U_ij = sum_kl U_kl lambda_g(U_ik U_jl^*) lambda_g, and delta_y through Peter-Weyl
  exch_.assign(n, Matrix<Complex>(n, n));
  for (std::size_t g = 0; g < n; ++g)
    for (const auto& u : irreps_) {
      const std::size_t d = u.degree;
      const double w = static_cast<double>(d) / static_cast<double>(n);
      const auto& ug = u.rho[g];
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            const Complex cy = w * std::conj(u.rho[y](i, j));
            for (std::size_t k = 0; k < d; ++k)
              for (std::size_t l = 0; l < d; ++l) {
                const Complex c = cy * ug(i, k) * std::conj(ug(j, l));
                if (c == Complex(0)) continue;
                for (std::size_t x = 0; x < n; ++x) exch_[g](x, y) += c * u.rho[x](k, l);
              }
          }
    }
}

QuantumDouble QuantumDouble::builtin(const std::string& name) {
  auto b = grp::builtin_reps(name);
  std::vector<grp::UnitaryIrrep<Complex>> irr;
  for (const auto& r : b.irreps) {
    grp::UnitaryIrrep<Complex> u{r.label, r.degree, {}};
    for (const auto& m : r.rho) {
      Matrix<Complex> x(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) x(i, j) = m(i, j).to_complex();
      u.rho.push_back(std::move(x));
    }
    irr.push_back(std::move(u));
  }
  return QuantumDouble(std::move(b.group), std::move(irr));
}

QuantumDouble::Element QuantumDouble::one() const {
  Element a = zero();
  for (std::size_t x = 0; x < order(); ++x) a(g_.identity(), x) = 1.0;
  return a;
}

QuantumDouble::Element QuantumDouble::basis(std::size_t x, std::size_t g) const {
  Element a = zero();
  a(g, x) = 1.0;
  return a;
}

QuantumDouble::Element QuantumDouble::mul(const Element& a, const Element& b) const {
  const std::size_t n = order();
  Element out = zero();
  std::vector<Complex> f(n), tf(n);
  for (std::size_t h = 0; h < n; ++h) {
    bool nz = false;
    for (std::size_t x = 0; x < n; ++x) nz = nz || b(h, x) != Complex(0);
    if (!nz) continue;
    for (std::size_t x = 0; x < n; ++x) f[x] = b(h, x);
    for (std::size_t g = 0; g < n; ++g) {
      // (a_g lambda_g)(f lambda_h) = a_g (exchange(g) f) lambda_g lambda_h; the exchange is an
      // antihomomorphism in g, so lambda_g lambda_h = lambda_hg (convolution against the flipped coproduct)
      std::fill(tf.begin(), tf.end(), Complex(0));
      for (std::size_t x = 0; x < n; ++x) {
        if (a(g, x) == Complex(0)) continue;
        for (std::size_t y = 0; y < n; ++y) tf[x] += exch_[g](x, y) * f[y];
      }
      const std::size_t hg = g_.mul(h, g);
      for (std::size_t x = 0; x < n; ++x) out(hg, x) += a(g, x) * tf[x];
    }
  }
  return out;
}

QuantumDouble::Element QuantumDouble::star(const Element& a) const {
  // (f lambda_g)^* = lambda_{g^-1} conj(f)
  const std::size_t n = order();
  Element out = zero();
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t gi = g_.inv(g);
    for (std::size_t x = 0; x < n; ++x) {
      Complex s = 0;
      for (std::size_t y = 0; y < n; ++y) s += exch_[gi](x, y) * std::conj(a(g, y));
      out(gi, x) += s;
    }
  }
  return out;
}

Complex QuantumDouble::tau(const Element& a) const {
  const std::size_t n = order();
  Complex t = 0;
  for (std::size_t g = 0; g < n; ++g) {
    Complex w = 0;
    for (const auto& u : irreps_) w += static_cast<double>(u.degree) * u.rho[g].trace();
    Complex h = 0;
    for (std::size_t x = 0; x < n; ++x) h += a(g, x);
    t += h / static_cast<double>(n) * w;
  }
  return t;
}

QuantumDouble::Element QuantumDouble::matrix_unit(std::size_t u, std::size_t i, std::size_t j) const {
  const auto& rep = irreps_.at(u);
  const std::size_t n = order();
  const double w = static_cast<double>(rep.degree) / static_cast<double>(n);
  Element a = zero();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x) a(g, x) = w * std::conj(rep.rho[g](i, j));
  return a;
}

double QuantumDouble::markov_residual() const {
  Element sum = zero();
  for (std::size_t u = 0; u < irreps_.size(); ++u) {
    const std::size_t d = irreps_[u].degree;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Element e = matrix_unit(u, i, j);
        sum += mul(e, star(e)) * Complex(1.0 / static_cast<double>(d));
      }
  }
  return (sum - one()).max_abs();
}

}  // namespace qsym::tube
