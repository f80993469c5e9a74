#pragma once

#include "cdhom/representation.hpp"
#include "cdhom/vector_polynomial.hpp"

namespace cdhom {

// sl(2) action on vector polynomials:
//   E f = -f'
//   H f = (-eta I + rho0(h)) f - z f'
//   F f = (-2 eta z I + 2 z rho0(h) - rho0(y)) f - z^2 f'
VectorPolynomial op_E(const VectorPolynomial &f);
VectorPolynomial op_H(const VectorPolynomial &f, const TriangularRep &rep);
VectorPolynomial op_F(const VectorPolynomial &f, const TriangularRep &rep);
/// -F f = 2 lambda z f + S_m f - 2 z D_m f + z^2 f'.
VectorPolynomial minus_F(const VectorPolynomial &f, const ModelParams &params,
                         const TriangularRep &rep);

struct BasisVector {
  int j = 0;
  int n = 0;
  VectorPolynomial poly{0};
};

/// u^j_n = (-F)^n eps_j from its closed form:
/// component j+k is binom(n,k) (j+1)_k (2 lambda - m + 2j + k)_{n-k} z^{n-k}.
BasisVector u_closed(int j, int n, const ModelParams &params);

/// Same vector by iterating minus_F from eps_j. Independent of u_closed.
BasisVector u_recursive(int j, int n, const ModelParams &params);

struct FlaggedValue {
  double value = 0.0;
  bool non_positive = false;
};

/// sigma^j_k = (2 lambda_j + k - 1) k.
FlaggedValue sigma_single(int j, int k, const ModelParams &params);
/// prod_{k=1}^n sigma^j_k = (2 lambda_j)_n (1)_n.
FlaggedValue sigma_cumulative(int j, int n, const ModelParams &params);

/// e^j_{n-j} = u^j_{n-j} / sqrt((2 lambda_j)_{n-j} (1)_{n-j}), without mu_j.
/// Zero vector when n < j. NormalizationFailure when the radicand is <= 0.
BasisVector e_basis(int j, int n, const ModelParams &params);

struct GMatrix {
  int n = 0;
  RMatrix entries;
};

/// G(n)_{l,j}: coefficient of z^{n-l} in component l of e^j_{n-j}.
/// Lower triangular, zero when l < j or n < l.
GMatrix g_matrix(int n, const ModelParams &params);

} // namespace cdhom
