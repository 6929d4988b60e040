#pragma once

#include <vector>

#include "qsym/grouprep/group.hpp"
#include "qsym/grouprep/rep.hpp"
#include "qsym/linalg/matrix.hpp"

namespace qsym::tube {

/// Drinfeld double of a finite group as Pol(G) (x) c_c(G^).
///
/// Elements are |G| x |G| arrays a(g, x), the coefficient of 1_x lambda_g, where 1_x is the
/// indicator function of x and lambda_g is evaluation at g. The exchange of lambda_g past a
/// function is assembled from the irreducible matrix coefficients; functionals multiply by
/// convolution against the flipped coproduct, so lambda_g lambda_h = lambda_hg.
class QuantumDouble {
 public:
  using Element = Matrix<Complex>;

  QuantumDouble(grp::FiniteGroup g, std::vector<grp::UnitaryIrrep<Complex>> irreps);
  static QuantumDouble builtin(const std::string& name);

  const grp::FiniteGroup& group() const { return g_; }
  std::size_t order() const { return g_.order(); }
  std::size_t dim() const { return order() * order(); }

  Element zero() const { return Element(order(), order()); }
  Element one() const;
  /// 1_x lambda_g
  Element basis(std::size_t x, std::size_t g) const;
  Element mul(const Element& a, const Element& b) const;
  Element star(const Element& a) const;
  /// h(f) sum_U d(U) chi_U(g) summed over the lambda components
  Complex tau(const Element& a) const;

  /// lambda_g f = exchange(g) f lambda_g, as an operator on functions
  const Matrix<Complex>& exchange(std::size_t g) const { return exch_[g]; }
  /// E_{U,ij} = d(U)/|G| sum_g conj(U_ij(g)) lambda_g
  Element matrix_unit(std::size_t u, std::size_t i, std::size_t j) const;
  /// max |a - b| over coefficients of sum d(U)^-1 E E* - 1
  double markov_residual() const;

  const std::vector<grp::UnitaryIrrep<Complex>>& irreps() const { return irreps_; }

 private:
  grp::FiniteGroup g_;
  std::vector<grp::UnitaryIrrep<Complex>> irreps_;
  std::vector<Matrix<Complex>> exch_;
};

}  // namespace qsym::tube
