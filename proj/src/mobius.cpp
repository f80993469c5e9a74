#include "cdhom/mobius.hpp"

#include <cmath>

#include "cdhom/errors.hpp"

namespace cdhom {

namespace {

constexpr double kDetTolerance = 1e-12;
constexpr double kPoleTolerance = 1e-14;

cplx denominator(const GroupElement &g, cplx z) {
  const cplx q = g.c() * z + g.d();
  if (std::abs(q) < kPoleTolerance)
    throw PoleHit("c z + d vanishes at the evaluation point");
  return q;
}

} // namespace

GroupElement::GroupElement(cplx a, cplx b, cplx c, cplx d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(a * d - b * c - 1.0) > kDetTolerance)
    throw DomainError("GroupElement: determinant differs from 1");
  tag();
}

GroupElement::GroupElement(cplx a, cplx b, cplx c, cplx d, Unchecked)
    : a_(a), b_(b), c_(c), d_(d) {
  tag();
}

void GroupElement::tag() {
  unitary_disc_ = std::abs(d_ - std::conj(a_)) <= kDetTolerance &&
                  std::abs(c_ - std::conj(b_)) <= kDetTolerance &&
                  std::abs(std::norm(a_) - std::norm(b_) - 1.0) <= kDetTolerance;
}

GroupElement GroupElement::rotation(double theta) {
  const cplx a = std::polar(1.0, 0.5 * theta);
  return {a, 0.0, 0.0, std::conj(a), Unchecked{}};
}

GroupElement GroupElement::inverse() const {
  return {d_, -b_, -c_, a_, Unchecked{}};
}

CMatrix GroupElement::matrix() const {
  CMatrix m(2, 2);
  m << a_, b_, c_, d_;
  return m;
}

GroupElement operator*(const GroupElement &g, const GroupElement &h) {
  return {g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
          g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_,
          GroupElement::Unchecked{}};
}

cplx act(const GroupElement &g, cplx z) {
  return (g.a() * z + g.b()) / denominator(g, z);
}

cplx derivative(const GroupElement &g, cplx z) {
  const cplx q = denominator(g, z);
  return 1.0 / (q * q);
}

Eigen::Matrix2cd LieAlgebraElement::matrix() const {
  Eigen::Matrix2cd m;
  m << 0.5 * c_h, c_x, c_y, -0.5 * c_h;
  return m;
}

GroupElement exp_basis(const LieAlgebraElement &X, double t) {
  const Eigen::Matrix2cd A = t * X.matrix();
  const cplx zero{0.0, 0.0};
  if (A(0, 1) == zero && A(1, 0) == zero) {
    const cplx e = std::exp(A(0, 0));
    return {e, 0.0, 0.0, std::exp(A(1, 1))};
  }
  if (A(0, 0) == zero) {
    if (A(1, 0) == zero)
      return {1.0, A(0, 1), 0.0, 1.0};
    if (A(0, 1) == zero)
      return {1.0, 0.0, A(1, 0), 1.0};
  }
  // A is traceless, so A^2 = s^2 I with s^2 = -det A.
  const cplx s2 = A(0, 0) * A(0, 0) + A(0, 1) * A(1, 0);
  const cplx s = std::sqrt(s2);
  cplx ch, sh_over_s;
  if (std::abs(s) < 1e-4) {
    ch = 1.0 + s2 / 2.0 + s2 * s2 / 24.0 + s2 * s2 * s2 / 720.0;
    sh_over_s = 1.0 + s2 / 6.0 + s2 * s2 / 120.0 + s2 * s2 * s2 / 5040.0;
  } else {
    ch = std::cosh(s);
    sh_over_s = std::sinh(s) / s;
  }
  const Eigen::Matrix2cd E =
      ch * Eigen::Matrix2cd::Identity() + sh_over_s * A;
  return {E(0, 0), E(0, 1), E(1, 0), E(1, 1)};
}

VectorField infinitesimal_action(const LieAlgebraElement &X) {
  return {X.c_x, X.c_h, -X.c_y};
}

} // namespace cdhom
