#include "cdhom/vector_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdhom {

VectorPolynomial::VectorPolynomial(int m) : m_(m), coeffs_(0, m + 1) {
  if (m < 0)
    throw std::invalid_argument("VectorPolynomial: m < 0");
}

VectorPolynomial::VectorPolynomial(int m, CMatrix coeffs)
    : m_(m), coeffs_(std::move(coeffs)) {
  if (m < 0 || coeffs_.cols() != m + 1)
    throw std::invalid_argument("VectorPolynomial: coefficient shape");
  trim();
}

VectorPolynomial VectorPolynomial::monomial(int m, int component, int degree,
                                            cplx c) {
  VectorPolynomial p(m);
  p.set_coeff(degree, component, c);
  return p;
}

cplx VectorPolynomial::coeff(int n, int l) const {
  if (n < 0 || n >= coeffs_.rows() || l < 0 || l > m_)
    return 0.0;
  return coeffs_(n, l);
}

void VectorPolynomial::set_coeff(int n, int l, cplx value) {
  if (n < 0 || l < 0 || l > m_)
    throw std::out_of_range("VectorPolynomial::set_coeff");
  if (n >= coeffs_.rows()) {
    if (value == cplx{0.0, 0.0})
      return;
    const auto old = coeffs_.rows();
    coeffs_.conservativeResize(n + 1, Eigen::NoChange);
    coeffs_.bottomRows(n + 1 - old).setZero();
  }
  coeffs_(n, l) = value;
  trim();
}

CVector VectorPolynomial::operator()(cplx z) const {
  CVector out = CVector::Zero(m_ + 1);
  for (auto n = coeffs_.rows() - 1; n >= 0; --n)
    out = out * z + coeffs_.row(n).transpose();
  return out;
}

VectorPolynomial VectorPolynomial::derivative() const {
  if (coeffs_.rows() <= 1)
    return VectorPolynomial(m_);
  CMatrix d(coeffs_.rows() - 1, m_ + 1);
  for (Eigen::Index n = 1; n < coeffs_.rows(); ++n)
    d.row(n - 1) = static_cast<double>(n) * coeffs_.row(n);
  return {m_, std::move(d)};
}

VectorPolynomial VectorPolynomial::shifted(int k) const {
  if (is_zero())
    return *this;
  CMatrix s = CMatrix::Zero(coeffs_.rows() + k, m_ + 1);
  s.bottomRows(coeffs_.rows()) = coeffs_;
  return {m_, std::move(s)};
}

VectorPolynomial VectorPolynomial::left_multiplied(const CMatrix &a) const {
  return {m_, coeffs_ * a.transpose()};
}

VectorPolynomial &VectorPolynomial::operator+=(const VectorPolynomial &other) {
  if (other.m_ != m_)
    throw std::invalid_argument("VectorPolynomial: component mismatch");
  if (other.coeffs_.rows() > coeffs_.rows()) {
    const auto old = coeffs_.rows();
    coeffs_.conservativeResize(other.coeffs_.rows(), Eigen::NoChange);
    coeffs_.bottomRows(other.coeffs_.rows() - old).setZero();
  }
  coeffs_.topRows(other.coeffs_.rows()) += other.coeffs_;
  trim();
  return *this;
}

VectorPolynomial &VectorPolynomial::operator-=(const VectorPolynomial &other) {
  return *this += cplx{-1.0} * other;
}

VectorPolynomial &VectorPolynomial::operator*=(cplx s) {
  coeffs_ *= s;
  trim();
  return *this;
}

double VectorPolynomial::max_abs_coeff() const {
  return is_zero() ? 0.0 : coeffs_.cwiseAbs().maxCoeff();
}

void VectorPolynomial::trim() {
  auto rows = coeffs_.rows();
  while (rows > 0 && coeffs_.row(rows - 1).isZero(0.0))
    --rows;
  if (rows != coeffs_.rows())
    coeffs_.conservativeResize(rows, Eigen::NoChange);
}

VectorPolynomial operator+(VectorPolynomial a, const VectorPolynomial &b) {
  return a += b;
}

VectorPolynomial operator-(VectorPolynomial a, const VectorPolynomial &b) {
  return a -= b;
}

VectorPolynomial operator*(cplx s, VectorPolynomial p) { return p *= s; }

double max_abs_difference(const VectorPolynomial &a,
                          const VectorPolynomial &b) {
  return (a - b).max_abs_coeff();
}

} // namespace cdhom
