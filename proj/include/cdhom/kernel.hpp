#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdhom/mobius.hpp"
#include "cdhom/representation.hpp"
#include "cdhom/types.hpp"

namespace cdhom {

struct KernelValue {
  cplx z;
  cplx w;
  CMatrix matrix;
};

// Distinct sample points of the open disc with |z| <= r_max.
class SampleGrid {
public:
  SampleGrid(std::vector<cplx> points, double r_max);

  /// 12 points: radii {0.15, 0.3, 0.45} (scaled by r_max/0.5) x 4 angles.
  static SampleGrid default_grid(double r_max = 0.5);
  /// count points uniform in the disc of radius r_max; deterministic in seed.
  static SampleGrid random(int count, double r_max, std::uint64_t seed);

  const std::vector<cplx> &points() const { return points_; }
  double r_max() const { return r_max_; }
  std::size_t size() const { return points_.size(); }

private:
  std::vector<cplx> points_;
  double r_max_;
};

/// d^p_z dbar^q_w (1 - z wbar)^{-a} by the finite Leibniz sum
///   sum_r C(p,r) C(q,r) r! (a)_{p+q-r} z^{q-r} wbar^{p-r} (1-z wbar)^{-a-p-q+r}.
cplx bergman_power_derivative(double a, int p, int q, cplx z, cplx w);

/// B~^(lambda_j)(z,w), entries (l,p) = d^{l-j} dbar^{p-j} (1-z wbar)^{-2 lambda_j}
/// for j <= l,p <= m, embedded in an (m+1)x(m+1) zero matrix.
CMatrix kernel_Bj_closed(int j, cplx z, cplx w, const ModelParams &params);

/// D_j = diag((j+1)_{l-j} / ((2 lambda_j)_{l-j} (1)_{l-j})), zero for l < j.
RMatrix d_j_diagonal(int j, const ModelParams &params);

/// K_j = D_j B~^(lambda_j) D_j.
KernelValue kernel_Kj(int j, cplx z, cplx w, const ModelParams &params);

/// K^(lambda,mu) = sum_j mu_j^2 K_j.
KernelValue kernel_full(cplx z, cplx w, const ModelParams &params);

/// sum_{n<=N} sum_j mu_j^2 e^j_{n-j}(z) e^j_{n-j}(w)^*. Oracle for kernel_full.
KernelValue kernel_series(cplx z, cplx w, const ModelParams &params, int N);

struct PositiveDefiniteReport {
  double min_eigenvalue = 0.0;
  bool pass = false;
  std::string diagnostic;
};

/// Minimum eigenvalue of the block Gram matrix [K(z_i, z_k)].
/// pass iff >= -tolerance. Normalization failures are reported, not thrown.
PositiveDefiniteReport check_positive_definite(const ModelParams &params,
                                               const SampleGrid &grid,
                                               double tolerance = 1e-10);

/// max over grid pairs of || J_g(z) K(gz, gw) J_g(w)^* - K(z, w) ||_F.
double check_quasi_invariance(const GroupElement &g, const SampleGrid &grid,
                              const ModelParams &params,
                              const TriangularRep &rep);

struct NormalizationReport {
  /// max_z || phi(z) K(z,0) phi(0)^* - I ||_F
  double residual = 0.0;
  /// || phi(0) - K(0,0)^{-1/2} ||_F
  double phi0_residual = 0.0;
  /// max over rotations and z of || Jn_k(z) Jn_k(0)^{-1} - I ||_F for the
  /// normalized multiplier Jn_g(z) = phi(z) J_g(z) phi(g z)^{-1}.
  double rotation_multiplier_residual = 0.0;
  CMatrix k00_sqrt;
};

/// phi(z) = K(0,0)^{1/2} K(z,0)^{-1} and the normalized kernel checks.
/// SingularKernelColumn when K(z,0) is numerically singular on the grid.
NormalizationReport normalize_kernel(const ModelParams &params,
                                     const SampleGrid &grid);

/// Hermitian square root of a positive definite matrix.
CMatrix hermitian_sqrt(const CMatrix &a);

} // namespace cdhom
