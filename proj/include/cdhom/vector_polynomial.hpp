#pragma once

#include "cdhom/types.hpp"

namespace cdhom {

// C^{m+1}-valued polynomial in z. coeffs(n, l) is the coefficient of z^n in
// component l. Trailing all-zero degrees are trimmed, so the zero polynomial
// has no rows and degree() == -1.
class VectorPolynomial {
public:
  explicit VectorPolynomial(int m);
  VectorPolynomial(int m, CMatrix coeffs);

  /// c * z^degree * eps_component.
  static VectorPolynomial monomial(int m, int component, int degree,
                                   cplx c = 1.0);

  int m() const { return m_; }
  int components() const { return m_ + 1; }
  int degree() const { return static_cast<int>(coeffs_.rows()) - 1; }
  bool is_zero() const { return coeffs_.rows() == 0; }

  /// Coefficient of z^n in component l; zero outside the stored range.
  cplx coeff(int n, int l) const;
  void set_coeff(int n, int l, cplx value);

  const CMatrix &coeffs() const { return coeffs_; }

  /// Componentwise Horner evaluation.
  CVector operator()(cplx z) const;

  VectorPolynomial derivative() const;
  /// z^k * p.
  VectorPolynomial shifted(int k = 1) const;
  /// A p with A a constant (m+1)x(m+1) matrix.
  VectorPolynomial left_multiplied(const CMatrix &a) const;

  VectorPolynomial &operator+=(const VectorPolynomial &other);
  VectorPolynomial &operator-=(const VectorPolynomial &other);
  VectorPolynomial &operator*=(cplx s);

  /// Largest coefficient modulus, 0 for the zero polynomial.
  double max_abs_coeff() const;

private:
  void trim();

  int m_;
  CMatrix coeffs_;
};

VectorPolynomial operator+(VectorPolynomial a, const VectorPolynomial &b);
VectorPolynomial operator-(VectorPolynomial a, const VectorPolynomial &b);
VectorPolynomial operator*(cplx s, VectorPolynomial p);

/// max |a - b| over all coefficients.
double max_abs_difference(const VectorPolynomial &a, const VectorPolynomial &b);

} // namespace cdhom
