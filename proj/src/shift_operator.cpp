#include "cdhom/shift_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cdhom/basis.hpp"
#include "cdhom/errors.hpp"
#include "cdhom/parallel.hpp"
#include "cdhom/scalar_math.hpp"

namespace cdhom {

namespace {

RMatrix scaled_g(int n, const ModelParams &params) {
  const int m = params.m();
  return g_matrix(n, params).entries *
         Eigen::Map<const RVector>(params.mu().data(), m + 1).asDiagonal();
}

} // namespace

RMatrix shift_block(int n, const ModelParams &params) {
  if (n < 0)
    throw DomainError("shift_block: n < 0");
  const int m = params.m();
  const int rows = std::min(n + 1, m) + 1;
  const int cols = std::min(n, m) + 1;
  const RMatrix G1 = g_matrix(n + 1, params).entries.topLeftCorner(rows, rows);
  const RMatrix G0 = g_matrix(n, params).entries.topLeftCorner(rows, cols);
  for (int i = 0; i < rows; ++i)
    if (!(G1(i, i) > 1e-300) || !std::isfinite(G1(i, i)))
      throw SingularG("shift_block: G(n+1) has a non-positive diagonal entry");
  const RMatrix X = G1.triangularView<Eigen::Lower>().solve(G0);
  RMatrix W = RMatrix::Zero(m + 1, m + 1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      W(i, j) = X(i, j) * params.mu(j) / params.mu(i);
  return W;
}

DegreeIndex::DegreeIndex(int m, int N) : m_(m), N_(N), size_(0) {
  if (m < 0 || N < 0)
    throw DomainError("DegreeIndex: negative size");
  offsets_.reserve(static_cast<std::size_t>(N) + 2);
  for (int n = 0; n <= N; ++n) {
    offsets_.push_back(size_);
    size_ += block_size(n);
  }
  offsets_.push_back(size_);
}

int DegreeIndex::block_size(int n) const { return std::min(n, m_) + 1; }

int DegreeIndex::offset(int n) const {
  return offsets_[static_cast<std::size_t>(n)];
}

int DegreeIndex::leading_size(int n) const {
  if (n < 0)
    return 0;
  return offsets_[static_cast<std::size_t>(std::min(n, N_) + 1)];
}

TruncatedOperator truncate(const ModelParams &params, int N) {
  if (N < 1)
    throw DomainError("truncate: N must be at least 1");
  DegreeIndex index(params.m(), N);
  CMatrix T = CMatrix::Zero(index.size(), index.size());
  for (int n = 0; n < N; ++n) {
    const RMatrix W = shift_block(n, params);
    T.block(index.offset(n + 1), index.offset(n), index.block_size(n + 1),
            index.block_size(n)) =
        W.topLeftCorner(index.block_size(n + 1), index.block_size(n))
            .cast<cplx>();
  }
  return {params, index, std::move(T)};
}

TruncatedOperator BlockShiftOperator::truncate(int N) const {
  return cdhom::truncate(params_, N);
}

CMatrix mobius_calculus(const GroupElement &g, const CMatrix &T) {
  if (std::abs(g.d()) < 1e-14)
    throw SingularResolvent("mobius_calculus: d = 0 makes cT + dI singular");
  const auto n = T.rows();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix resolvent = g.c() * T + g.d() * I;
  CMatrix out;
  if (resolvent.isLowerTriangular(0.0)) {
    out = resolvent.triangularView<Eigen::Lower>().solve(
        CMatrix(g.a() * T + g.b() * I));
  } else {
    Eigen::PartialPivLU<CMatrix> lu(resolvent);
    out = lu.solve(CMatrix(g.a() * T + g.b() * I));
  }
  if (!out.allFinite())
    throw SingularResolvent("mobius_calculus: cT + dI is not invertible");
  return out;
}

namespace {

CMatrix dft_matrix(int rows, int samples) {
  CMatrix dft(rows, samples);
  for (int k = 0; k < rows; ++k)
    for (int s = 0; s < samples; ++s)
      dft(k, s) = std::polar(1.0 / samples,
                             -2.0 * std::numbers::pi * ((k * s) % samples) /
                                 samples);
  return dft;
}

cplx circle_point(int s, int samples) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(s) / samples);
}

// U_g restricted to each summand j is the scalar discrete series of weight
// lambda_j in the basis sqrt((2 lambda_j)_k / k!) z^k, placed on psi_{k+j,j}.
RepresentationMatrix by_k_type(const GroupElement &g, const ModelParams &params,
                               int N, BranchPolicy policy) {
  const int m = params.m();
  const DegreeIndex index(m, N);
  const int samples = 4 * (N + 1) + 64;
  const GroupElement gi = g.inverse();

  std::vector<cplx> image(static_cast<std::size_t>(samples));
  std::vector<cplx> log_derivative(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    const cplx z = circle_point(s, samples);
    const cplx q = gi.c() * z + gi.d();
    if (std::abs(q) < 1e-14)
      throw PoleHit("representation_matrix: c z + d vanishes on the circle");
    if (policy == BranchPolicy::strict && !(q.real() > 0.0))
      throw BranchWarning("representation_matrix: Re(c z + d) <= 0");
    image[static_cast<std::size_t>(s)] = act(gi, z);
    log_derivative[static_cast<std::size_t>(s)] = -2.0 * std::log(q);
  }
  const CMatrix dft = dft_matrix(N + 1, samples);

  RepresentationMatrix out{CMatrix::Zero(index.size(), index.size()), 0.0};
  for (int j = 0; j <= std::min(m, N); ++j) {
    const double a = 2.0 * params.lambda_j(j);
    const int K = N - j;
    std::vector<double> norm(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
      const double r = pochhammer_ratio(a, 1.0, k);
      if (!(r > 0.0) || !std::isfinite(r))
        throw NormalizationFailure("representation_matrix: (2 lambda_j)_k <= 0");
      norm[static_cast<std::size_t>(k)] = std::sqrt(r);
    }
    CMatrix values(samples, K + 1);
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t s) {
      const cplx w = image[s];
      cplx v = std::exp(0.5 * a * log_derivative[s]);
      for (int k = 0; k <= K; ++k) {
        values(static_cast<Eigen::Index>(s), k) = v * norm[static_cast<std::size_t>(k)];
        v *= w;
      }
    });
    const CMatrix taylor = dft.topRows(K + 1) * values;
    for (int k = 0; k <= K; ++k)
      for (int kp = 0; kp <= K; ++kp)
        out.matrix(index.position(kp + j, j), index.position(k + j, j)) =
            taylor(kp, k) / norm[static_cast<std::size_t>(kp)];
  }
  for (int col = 0; col < index.size(); ++col)
    out.truncation_loss =
        std::max(out.truncation_loss, 1.0 - out.matrix.col(col).squaredNorm());
  return out;
}

} // namespace

RepresentationMatrix representation_matrix(const GroupElement &g,
                                           const ModelParams &params,
                                           const TriangularRep &rep, int N,
                                           RepresentationMethod method) {
  if (method == RepresentationMethod::k_type)
    return by_k_type(g, params, N, BranchPolicy::strict);
  const int m = params.m();
  const int b = m + 1;
  const DegreeIndex index(m, N);
  const int dim = index.size();
  const int samples = 4 * (N + 1) + 64;
  const GroupElement gi = g.inverse();

  std::vector<RMatrix> GD;
  GD.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n)
    GD.push_back(scaled_g(n, params));

  // values(s, l + b*col) = (U_g psi_col)(z_s)_l at z_s = exp(2 pi i s / P)
  CMatrix values(samples, b * dim);
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t s) {
    const cplx z = circle_point(static_cast<int>(s), samples);
    const cplx q = act(gi, z);
    const CMatrix J = multiplier_J(gi, z, params, rep);
    CMatrix B = CMatrix::Zero(b, dim);
    for (int n = 0; n <= N; ++n)
      for (int j = 0; j < index.block_size(n); ++j)
        for (int l = j; l < index.block_size(n); ++l)
          B(l, index.position(n, j)) = GD[static_cast<std::size_t>(n)](l, j) *
                                       std::pow(q, n - l);
    const CMatrix V = J * B;
    values.row(static_cast<Eigen::Index>(s)) =
        Eigen::Map<const Eigen::RowVectorXcd>(V.data(), V.size());
  });

  const CMatrix taylor = dft_matrix(N + 1, samples) * values;

  std::vector<CMatrix> lower;
  lower.reserve(GD.size());
  for (int n = 0; n <= N; ++n) {
    const int bs = index.block_size(n);
    lower.push_back(
        GD[static_cast<std::size_t>(n)].topLeftCorner(bs, bs).cast<cplx>());
  }

  RepresentationMatrix out{CMatrix::Zero(dim, dim), 0.0};
  for (int col = 0; col < dim; ++col) {
    for (int n = 0; n <= N; ++n) {
      const int bs = index.block_size(n);
      CVector c(bs);
      for (int l = 0; l < bs; ++l)
        c(l) = taylor(n - l, l + b * col);
      const CVector x = lower[static_cast<std::size_t>(n)]
                            .triangularView<Eigen::Lower>()
                            .solve(c);
      out.matrix.block(index.offset(n), col, bs, 1) = x;
    }
    out.truncation_loss = std::max(
        out.truncation_loss, 1.0 - out.matrix.col(col).squaredNorm());
  }
  return out;
}

double spectral_norm(const CMatrix &a) {
  if (a.size() == 0)
    return 0.0;
  Eigen::BDCSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

HomogeneityReport check_homogeneity(const GroupElement &g,
                                    const ModelParams &params,
                                    const TriangularRep &rep, int N,
                                    int guard) {
  if (N - guard < 0)
    throw DomainError("check_homogeneity: guard band exceeds truncation");
  const RepresentationMatrix U = representation_matrix(g, params, rep, N);
  const TruncatedOperator T = truncate(params, N);
  const CMatrix gT = mobius_calculus(g, T.matrix);
  const int k = T.index.leading_size(N - guard);
  const CMatrix forward = U.matrix.adjoint() * T.matrix * U.matrix - gT;
  const CMatrix reverse = U.matrix * T.matrix * U.matrix.adjoint() - gT;
  return {spectral_norm(forward.topLeftCorner(k, k)),
          spectral_norm(reverse.topLeftCorner(k, k)), U.truncation_loss};
}

double check_unitarity(const GroupElement &g, const ModelParams &params,
                       const TriangularRep &rep, int N, int guard) {
  if (N - guard < 0)
    throw DomainError("check_unitarity: guard band exceeds truncation");
  const RepresentationMatrix U = representation_matrix(g, params, rep, N);
  const DegreeIndex index(params.m(), N);
  const int k = index.leading_size(N - guard);
  const CMatrix gram = U.matrix.adjoint() * U.matrix -
                       CMatrix::Identity(index.size(), index.size());
  return spectral_norm(gram.topLeftCorner(k, k));
}

double check_adjoint_eigenvector(const ModelParams &params, cplx w,
                                 const CVector &xi, int N) {
  if (!(std::abs(w) < 1.0))
    throw DomainError("check_adjoint_eigenvector: |w| >= 1");
  const TruncatedOperator T = truncate(params, N);
  const auto &index = T.index;
  CVector k = CVector::Zero(index.size());
  for (int n = 0; n <= N; ++n) {
    const RMatrix GD = scaled_g(n, params);
    for (int j = 0; j < index.block_size(n); ++j) {
      cplx c = 0.0;
      for (int l = j; l < index.block_size(n); ++l)
        c += GD(l, j) * std::conj(std::pow(w, n - l)) * xi(l);
      k(index.position(n, j)) = c;
    }
  }
  return (T.matrix.adjoint() * k - std::conj(w) * k).norm();
}

} // namespace cdhom
