#include "cdhom/basis.hpp"

#include <cmath>
#include <sstream>

#include "cdhom/errors.hpp"
#include "cdhom/scalar_math.hpp"

namespace cdhom {

VectorPolynomial op_E(const VectorPolynomial &f) {
  return cplx{-1.0} * f.derivative();
}

VectorPolynomial op_H(const VectorPolynomial &f, const TriangularRep &rep) {
  const int m = rep.m();
  const CMatrix A =
      (rep.rho0_h() - rep.eta() * RMatrix::Identity(m + 1, m + 1)).cast<cplx>();
  return f.left_multiplied(A) - f.derivative().shifted(1);
}

VectorPolynomial op_F(const VectorPolynomial &f, const TriangularRep &rep) {
  const int m = rep.m();
  const CMatrix A =
      (2.0 * rep.rho0_h() - 2.0 * rep.eta() * RMatrix::Identity(m + 1, m + 1))
          .cast<cplx>();
  return f.left_multiplied(A).shifted(1) -
         f.left_multiplied(rep.rho_y().cast<cplx>()) -
         f.derivative().shifted(2);
}

VectorPolynomial minus_F(const VectorPolynomial &f, const ModelParams &params,
                         const TriangularRep &rep) {
  const CMatrix S = rep.rho_y().cast<cplx>();
  const CMatrix D = rep.d_m().cast<cplx>();
  VectorPolynomial out = cplx{2.0 * params.lambda()} * f.shifted(1);
  out += f.left_multiplied(S);
  out -= cplx{2.0} * f.left_multiplied(D).shifted(1);
  out += f.derivative().shifted(2);
  return out;
}

BasisVector u_closed(int j, int n, const ModelParams &params) {
  const int m = params.m();
  const double a = 2.0 * params.lambda() - m + 2.0 * j;
  VectorPolynomial p(m);
  for (int k = 0; j + k <= m && k <= n; ++k) {
    const double c = static_cast<double>(binom(n, k)) * pochhammer(j + 1.0, k) *
                     pochhammer(a + k, n - k);
    p.set_coeff(n - k, j + k, c);
  }
  return {j, n, std::move(p)};
}

BasisVector u_recursive(int j, int n, const ModelParams &params) {
  const TriangularRep rep(params);
  VectorPolynomial p = VectorPolynomial::monomial(params.m(), j, 0);
  for (int i = 0; i < n; ++i)
    p = minus_F(p, params, rep);
  return {j, n, std::move(p)};
}

FlaggedValue sigma_single(int j, int k, const ModelParams &params) {
  const double v = (2.0 * params.lambda_j(j) + k - 1.0) * k;
  return {v, !(v > 0.0)};
}

FlaggedValue sigma_cumulative(int j, int n, const ModelParams &params) {
  const double a = 2.0 * params.lambda_j(j);
  bool bad = false;
  for (int k = 1; k <= n; ++k)
    bad = bad || !(a + k - 1.0 > 0.0);
  return {pochhammer(a, n) * pochhammer(1.0, n), bad};
}

namespace {

void require_normalizable(int j, int n, const ModelParams &params) {
  if (n <= j)
    return;
  const FlaggedValue s = sigma_cumulative(j, n - j, params);
  if (s.non_positive || !(s.value > 0.0)) {
    std::ostringstream msg;
    msg << "normalizing radicand (2 lambda_" << j << ")_" << (n - j)
        << " (1)_" << (n - j) << " = " << s.value
        << " is not positive (2 lambda_j = " << 2.0 * params.lambda_j(j)
        << "); requires 2 lambda > m";
    throw NormalizationFailure(msg.str());
  }
}

} // namespace

BasisVector e_basis(int j, int n, const ModelParams &params) {
  if (n < j)
    return {j, n, VectorPolynomial(params.m())};
  require_normalizable(j, n, params);
  BasisVector u = u_closed(j, n - j, params);
  const double s = sigma_cumulative(j, n - j, params).value;
  u.poly *= 1.0 / std::sqrt(s);
  u.n = n;
  return u;
}

GMatrix g_matrix(int n, const ModelParams &params) {
  const int m = params.m();
  GMatrix G{n, RMatrix::Zero(m + 1, m + 1)};
  for (int j = 0; j <= m && j <= n; ++j) {
    require_normalizable(j, n, params);
    const double a = 2.0 * params.lambda_j(j);
    for (int k = 0; j + k <= m && j + k <= n; ++k) {
      const int r = n - j - k;
      const double first = pochhammer_ratio(a + k, 1.0, r);
      const double second = pochhammer_ratio(r + 1.0, a, k);
      G.entries(j + k, j) = std::sqrt(first) * std::sqrt(second) *
                            pochhammer_ratio(j + 1.0, 1.0, k);
    }
  }
  return G;
}

} // namespace cdhom
