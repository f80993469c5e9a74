#pragma once

#include <utility>
#include <vector>

#include "cdhom/mobius.hpp"
#include "cdhom/representation.hpp"
#include "cdhom/types.hpp"

namespace cdhom {

/// W(n) = D(mu)^{-1} G(n+1)^{-1} G(n) D(mu). For n+1 < m the inverse is taken
/// on the active block (rows <= n+1, columns <= n) and the rest is zero.
RMatrix shift_block(int n, const ModelParams &params);

// Index of the orthonormal basis psi_{n,j} = mu_j e^j_{n-j}, n <= N, j <= min(n,m).
// Basis vectors with j > n vanish and are not indexed.
class DegreeIndex {
public:
  DegreeIndex(int m, int N);

  int m() const { return m_; }
  int N() const { return N_; }
  int size() const { return size_; }
  /// Number of basis vectors in H(n).
  int block_size(int n) const;
  /// First position of H(n).
  int offset(int n) const;
  int position(int n, int j) const { return offset(n) + j; }
  /// Number of positions occupied by degrees 0..n.
  int leading_size(int n) const;

private:
  int m_, N_, size_;
  std::vector<int> offsets_;
};

// Matrix of M^(lambda,mu) on degrees <= N.
struct TruncatedOperator {
  ModelParams params;
  DegreeIndex index;
  CMatrix matrix;
};

// The block shift: W(n) generated on demand.
class BlockShiftOperator {
public:
  explicit BlockShiftOperator(ModelParams params) : params_(std::move(params)) {}
  const ModelParams &params() const { return params_; }
  RMatrix block(int n) const { return shift_block(n, params_); }
  TruncatedOperator truncate(int N) const;

private:
  ModelParams params_;
};

/// Block (n+1, n) is W(n) restricted to the indexed basis.
TruncatedOperator truncate(const ModelParams &params, int N);

/// (aT + b)(cT + d)^{-1}. SingularResolvent when cT + dI is not invertible.
CMatrix mobius_calculus(const GroupElement &g, const CMatrix &T);

struct RepresentationMatrix {
  CMatrix matrix;
  /// max over columns of 1 - ||column||^2 (mass leaked past degree N).
  double truncation_loss = 0.0;
};

// k_type: each summand {psi_{n,j}}_n carries the scalar discrete series of
// weight lambda_j, whose matrix needs only diagonal normalizations.
// direct: U_g psi is sampled from its definition and the coordinates come
// from the triangular systems G(n) D(mu); cond(G(n)) grows like a power of n.
// Both take Taylor coefficients by a DFT on the unit circle.
enum class RepresentationMethod { k_type, direct };

/// Matrix of U_g in the orthonormal basis up to degree N.
RepresentationMatrix representation_matrix(
    const GroupElement &g, const ModelParams &params, const TriangularRep &rep,
    int N, RepresentationMethod method = RepresentationMethod::k_type);

struct HomogeneityReport {
  /// || (U_g^* T U_g - g(T)) on degrees <= N - guard ||_2
  double residual = 0.0;
  /// same with the orientation U_g T U_g^*
  double reverse_residual = 0.0;
  double truncation_loss = 0.0;
};

HomogeneityReport check_homogeneity(const GroupElement &g,
                                    const ModelParams &params,
                                    const TriangularRep &rep, int N,
                                    int guard = 5);

/// || (U_g^* U_g - I) on degrees <= N - guard ||_2
double check_unitarity(const GroupElement &g, const ModelParams &params,
                       const TriangularRep &rep, int N, int guard = 5);

/// || T_N^* k - wbar k || with k the coordinates of K_w xi.
double check_adjoint_eigenvector(const ModelParams &params, cplx w,
                                 const CVector &xi, int N);

double spectral_norm(const CMatrix &a);

} // namespace cdhom
