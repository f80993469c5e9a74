#include "cdhom/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "cdhom/basis.hpp"
#include "cdhom/errors.hpp"
#include "cdhom/parallel.hpp"
#include "cdhom/scalar_math.hpp"

namespace cdhom {

namespace {

void require_disc(cplx z, cplx w) {
  if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0))
    throw DomainError("kernel: points must lie in the open unit disc");
}

double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

SampleGrid::SampleGrid(std::vector<cplx> points, double r_max)
    : points_(std::move(points)), r_max_(r_max) {
  if (!(r_max_ > 0.0 && r_max_ < 1.0))
    throw ConfigError("SampleGrid: r_max must lie in (0, 1)");
  if (points_.empty())
    throw ConfigError("SampleGrid: no points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (std::abs(points_[i]) > r_max_ * (1.0 + 1e-15))
      throw ConfigError("SampleGrid: point outside r_max");
    for (std::size_t k = 0; k < i; ++k)
      if (points_[i] == points_[k])
        throw ConfigError("SampleGrid: duplicate point");
  }
}

SampleGrid SampleGrid::default_grid(double r_max) {
  std::vector<cplx> pts;
  const double scale = r_max / 0.5;
  for (double r : {0.15, 0.3, 0.45})
    for (int k = 0; k < 4; ++k)
      pts.push_back(std::polar(r * scale, std::numbers::pi / 8 +
                                              k * std::numbers::pi / 2));
  return {std::move(pts), r_max};
}

SampleGrid SampleGrid::random(int count, double r_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(pts.size()) < count) {
    const double r = r_max * std::sqrt(unit_uniform(rng));
    const double t = 2.0 * std::numbers::pi * unit_uniform(rng);
    const cplx p = std::polar(r, t);
    if (std::find(pts.begin(), pts.end(), p) == pts.end())
      pts.push_back(p);
  }
  return {std::move(pts), r_max};
}

cplx bergman_power_derivative(double a, int p, int q, cplx z, cplx w) {
  const cplx wb = std::conj(w);
  const cplx base = 1.0 - z * wb;
  cplx sum = 0.0;
  double r_factorial = 1.0;
  for (int r = 0; r <= std::min(p, q); ++r) {
    if (r > 0)
      r_factorial *= r;
    const double c = static_cast<double>(binom(p, r) * binom(q, r)) *
                     r_factorial * pochhammer(a, p + q - r);
    sum += c * std::pow(z, q - r) * std::pow(wb, p - r) *
           cpow_principal(base, -(a + p + q - r));
  }
  return sum;
}

CMatrix kernel_Bj_closed(int j, cplx z, cplx w, const ModelParams &params) {
  require_disc(z, w);
  const int m = params.m();
  const double a = 2.0 * params.lambda_j(j);
  CMatrix B = CMatrix::Zero(m + 1, m + 1);
  for (int l = j; l <= m; ++l)
    for (int p = j; p <= m; ++p)
      B(l, p) = bergman_power_derivative(a, l - j, p - j, z, w);
  return B;
}

RMatrix d_j_diagonal(int j, const ModelParams &params) {
  const int m = params.m();
  const double a = 2.0 * params.lambda_j(j);
  RMatrix D = RMatrix::Zero(m + 1, m + 1);
  for (int l = j; l <= m; ++l) {
    const double denom = pochhammer(a, l - j) * pochhammer(1.0, l - j);
    if (!(denom > 0.0) && l > j)
      throw NormalizationFailure("D_j: (2 lambda_j)_{l-j} is not positive; "
                                 "requires 2 lambda > m");
    D(l, l) = pochhammer(j + 1.0, l - j) / denom;
  }
  return D;
}

KernelValue kernel_Kj(int j, cplx z, cplx w, const ModelParams &params) {
  const CMatrix D = d_j_diagonal(j, params).cast<cplx>();
  return {z, w, D * kernel_Bj_closed(j, z, w, params) * D};
}

KernelValue kernel_full(cplx z, cplx w, const ModelParams &params) {
  const int m = params.m();
  CMatrix K = CMatrix::Zero(m + 1, m + 1);
  for (int j = 0; j <= m; ++j)
    K += params.mu(j) * params.mu(j) * kernel_Kj(j, z, w, params).matrix;
  return {z, w, K};
}

KernelValue kernel_series(cplx z, cplx w, const ModelParams &params, int N) {
  require_disc(z, w);
  const int m = params.m();
  CMatrix K = CMatrix::Zero(m + 1, m + 1);
  const RMatrix Dmu =
      Eigen::Map<const RVector>(params.mu().data(), m + 1).asDiagonal();
  for (int n = 0; n <= N; ++n) {
    const RMatrix G = g_matrix(n, params).entries * Dmu;
    CVector dz = CVector::Zero(m + 1), dw = CVector::Zero(m + 1);
    for (int l = 0; l <= std::min(n, m); ++l) {
      dz(l) = std::pow(z, n - l);
      dw(l) = std::pow(w, n - l);
    }
    const CMatrix Ez = dz.asDiagonal() * G.cast<cplx>();
    const CMatrix Ew = dw.asDiagonal() * G.cast<cplx>();
    K += Ez * Ew.adjoint();
  }
  return {z, w, K};
}

PositiveDefiniteReport check_positive_definite(const ModelParams &params,
                                               const SampleGrid &grid,
                                               double tolerance) {
  const int b = params.m() + 1;
  const auto &pts = grid.points();
  const auto p = static_cast<int>(pts.size());
  CMatrix gram(p * b, p * b);
  try {
    std::vector<CMatrix> rows(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
      CMatrix row(b, p * b);
      for (int k = 0; k < p; ++k)
        row.middleCols(k * b, b) = kernel_full(pts[i], pts[k], params).matrix;
      rows[i] = std::move(row);
    });
    for (int i = 0; i < p; ++i)
      gram.middleRows(i * b, b) = rows[static_cast<std::size_t>(i)];
  } catch (const NormalizationFailure &e) {
    return {std::nan(""), false, std::string("NormalizationFailure: ") + e.what()};
  }
  const CMatrix herm = 0.5 * (gram + gram.adjoint());
  if (!herm.allFinite())
    return {std::nan(""), false, "Gram matrix has non-finite entries"};
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  PositiveDefiniteReport rep{lo, lo >= -tolerance, {}};
  if (!rep.pass)
    rep.diagnostic = "Gram matrix has a negative eigenvalue";
  return rep;
}

double check_quasi_invariance(const GroupElement &g, const SampleGrid &grid,
                              const ModelParams &params,
                              const TriangularRep &rep) {
  const auto &pts = grid.points();
  std::vector<CMatrix> J(pts.size());
  std::vector<cplx> moved(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    J[i] = multiplier_J(g, pts[i], params, rep);
    moved[i] = act(g, pts[i]);
  }
  std::vector<double> worst(pts.size(), 0.0);
  parallel_for(pts.size(), [&](std::size_t i) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const CMatrix lhs =
          J[i] * kernel_full(moved[i], moved[k], params).matrix * J[k].adjoint();
      const double r = (lhs - kernel_full(pts[i], pts[k], params).matrix).norm();
      worst[i] = std::max(worst[i], r);
    }
  });
  return *std::max_element(worst.begin(), worst.end());
}

CMatrix hermitian_sqrt(const CMatrix &a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (a + a.adjoint()));
  if (!(es.eigenvalues().minCoeff() > 0.0))
    throw DomainError("hermitian_sqrt: matrix is not positive definite");
  return es.eigenvectors() *
         es.eigenvalues().cwiseSqrt().cast<cplx>().asDiagonal() *
         es.eigenvectors().adjoint();
}

NormalizationReport normalize_kernel(const ModelParams &params,
                                     const SampleGrid &grid) {
  const int b = params.m() + 1;
  const CMatrix I = CMatrix::Identity(b, b);
  const CMatrix K00 = kernel_full(0.0, 0.0, params).matrix;
  NormalizationReport out;
  out.k00_sqrt = hermitian_sqrt(K00);

  auto phi = [&](cplx z) {
    const CMatrix Kz0 = kernel_full(z, 0.0, params).matrix;
    Eigen::JacobiSVD<CMatrix> svd(Kz0);
    const auto &s = svd.singularValues();
    if (!(s(s.size() - 1) > 1e-12 * s(0)))
      throw SingularKernelColumn("normalize_kernel: K(z,0) is singular");
    return CMatrix(out.k00_sqrt * Kz0.inverse());
  };

  const CMatrix phi0 = phi(0.0);
  out.phi0_residual = (phi0 - hermitian_sqrt(K00).inverse()).norm();

  const TriangularRep rep(params);
  for (cplx z : grid.points()) {
    const CMatrix Kz0 = kernel_full(z, 0.0, params).matrix;
    out.residual =
        std::max(out.residual, (phi(z) * Kz0 * phi0.adjoint() - I).norm());
    for (double theta : {0.3, -0.7, 1.1}) {
      const GroupElement k = GroupElement::rotation(theta);
      auto normalized = [&](cplx x) {
        return CMatrix(phi(x) * multiplier_J(k, x, params, rep) *
                       phi(act(k, x)).inverse());
      };
      const CMatrix r = normalized(z) * normalized(0.0).inverse() - I;
      out.rotation_multiplier_residual =
          std::max(out.rotation_multiplier_residual, r.norm());
    }
  }
  return out;
}

} // namespace cdhom
