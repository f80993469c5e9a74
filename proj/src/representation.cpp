#include "cdhom/representation.hpp"

#include <cmath>
#include <sstream>

#include "cdhom/errors.hpp"
#include "cdhom/scalar_math.hpp"

namespace cdhom {

ModelParams::ModelParams(double lambda, std::vector<double> mu,
                         Degenerate policy)
    : lambda_(lambda), m_(static_cast<int>(mu.size()) - 1), mu_(std::move(mu)),
      allow_degenerate_(policy == Degenerate::allow) {
  if (mu_.empty())
    throw ConfigError("ModelParams: mu must have at least one entry");
  if (!std::isfinite(lambda_))
    throw ConfigError("ModelParams: lambda must be finite");
  for (double v : mu_)
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError("ModelParams: every mu_j must be positive");
  if (!(2.0 * lambda_ > m_) && !allow_degenerate_) {
    std::ostringstream msg;
    msg << "ModelParams: need 2*lambda > m (lambda=" << lambda_
        << ", m=" << m_ << ")";
    throw ConfigError(msg.str());
  }
}

TriangularRep::TriangularRep(const ModelParams &params)
    : m_(params.m()), eta_(params.eta()),
      rho_h_(RMatrix::Zero(m_ + 1, m_ + 1)),
      rho0_h_(RMatrix::Zero(m_ + 1, m_ + 1)),
      rho_y_(RMatrix::Zero(m_ + 1, m_ + 1)) {
  for (int j = 0; j <= m_; ++j) {
    rho0_h_(j, j) = -j;
    rho_h_(j, j) = -(eta_ + j);
    if (j > 0)
      rho_y_(j, j - 1) = j;
  }
}

RMatrix TriangularRep::d_m() const {
  return rho0_h_ + 0.5 * m_ * RMatrix::Identity(m_ + 1, m_ + 1);
}

CMatrix multiplier_J0(const GroupElement &g, cplx z, const TriangularRep &rep,
                      BranchPolicy policy) {
  const cplx q = g.c() * z + g.d();
  if (std::abs(q) < 1e-14)
    throw PoleHit("multiplier: c z + d vanishes");
  if (policy == BranchPolicy::strict && !(q.real() > 0.0))
    throw BranchWarning("multiplier: Re(c z + d) <= 0, principal branch "
                        "no longer continuous from the identity");
  const int m = rep.m();
  const cplx alpha = -g.c() / q;
  // exp(alpha S_m) has (l, p) entry binom(l, p) alpha^{l-p}.
  CMatrix J0 = CMatrix::Zero(m + 1, m + 1);
  for (int p = 0; p <= m; ++p) {
    const cplx diag = std::pow(q, -2 * p);
    cplx apow = 1.0;
    for (int l = p; l <= m; ++l) {
      J0(l, p) = static_cast<double>(binom(l, p)) * apow * diag;
      apow *= alpha;
    }
  }
  return J0;
}

CMatrix multiplier_J(const GroupElement &g, cplx z, const ModelParams &params,
                     const TriangularRep &rep, BranchPolicy policy) {
  CMatrix J0 = multiplier_J0(g, z, rep, policy);
  return cpow_principal(derivative(g, z), params.eta()) * J0;
}

TransformedSection::TransformedSection(GroupElement g,
                                       std::function<CVector(cplx)> f,
                                       ModelParams params, BranchPolicy policy)
    : g_inverse_(g.inverse()), f_(std::move(f)), params_(params),
      rep_(params_), policy_(policy) {}

CVector TransformedSection::operator()(cplx z) const {
  const CMatrix J = multiplier_J(g_inverse_, z, params_, rep_, policy_);
  return J * f_(act(g_inverse_, z));
}

TransformedSection act_U(const GroupElement &g, const VectorPolynomial &f,
                         const ModelParams &params, BranchPolicy policy) {
  if (f.m() != params.m())
    throw DomainError("act_U: polynomial has the wrong component count");
  return {g, [f](cplx w) { return f(w); }, params, policy};
}

double check_cocycle(const GroupElement &g, const GroupElement &h, cplx z,
                     const ModelParams &params, const TriangularRep &rep) {
  const CMatrix lhs = multiplier_J(g * h, z, params, rep);
  const CMatrix rhs =
      multiplier_J(h, z, params, rep) * multiplier_J(g, act(h, z), params, rep);
  return (lhs - rhs).norm();
}

} // namespace cdhom
