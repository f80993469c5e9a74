#pragma once

#include <functional>
#include <vector>

#include "cdhom/mobius.hpp"
#include "cdhom/types.hpp"
#include "cdhom/vector_polynomial.hpp"

namespace cdhom {

enum class Degenerate { reject, allow };

// The triple (lambda, m, mu) parameterizing one kernel/operator family.
// m is mu.size() - 1. Construction requires 2 lambda > m unless
// Degenerate::allow is passed (used only for negative tests).
class ModelParams {
public:
  ModelParams(double lambda, std::vector<double> mu,
              Degenerate policy = Degenerate::reject);

  double lambda() const { return lambda_; }
  int m() const { return m_; }
  const std::vector<double> &mu() const { return mu_; }
  double mu(int j) const { return mu_[static_cast<std::size_t>(j)]; }
  bool degenerate_allowed() const { return allow_degenerate_; }

  /// eta = lambda - m/2.
  double eta() const { return lambda_ - 0.5 * m_; }
  /// lambda_j = lambda - m/2 + j.
  double lambda_j(int j) const { return eta() + j; }

private:
  double lambda_;
  int m_;
  std::vector<double> mu_;
  bool allow_degenerate_;
};

// rho(h), rho(y) for the multiplicity-free case:
//   rho0(h) = diag(0, -1, ..., -m),  rho(h) = rho0(h) - eta I,
//   rho(y) = S_m with (j, j-1) entry j.
class TriangularRep {
public:
  explicit TriangularRep(const ModelParams &params);

  int m() const { return m_; }
  double eta() const { return eta_; }
  const RMatrix &rho_h() const { return rho_h_; }
  const RMatrix &rho0_h() const { return rho0_h_; }
  const RMatrix &rho_y() const { return rho_y_; }
  /// D_m = rho0(h) + (m/2) I = diag(m/2, m/2 - 1, ..., -m/2).
  RMatrix d_m() const;

private:
  int m_;
  double eta_;
  RMatrix rho_h_, rho0_h_, rho_y_;
};

enum class BranchPolicy { strict, permissive };

/// rho0(exp(-c/(cz+d) y)) rho0(exp(2 log(cz+d) h))
///   = exp(-c/(cz+d) S_m) diag((cz+d)^{-2j}).
/// Under BranchPolicy::strict, BranchWarning is thrown when Re(cz+d) <= 0.
CMatrix multiplier_J0(const GroupElement &g, cplx z, const TriangularRep &rep,
                      BranchPolicy policy = BranchPolicy::strict);

/// J_g(z) = g'(z)^eta J0_g(z), principal branch.
CMatrix multiplier_J(const GroupElement &g, cplx z, const ModelParams &params,
                     const TriangularRep &rep,
                     BranchPolicy policy = BranchPolicy::strict);

// U_g f as an evaluable section: z -> J_{g^{-1}}(z) f(g^{-1} z). For general g
// the result is not a polynomial, so it is only sampled.
class TransformedSection {
public:
  TransformedSection(GroupElement g, std::function<CVector(cplx)> f,
                     ModelParams params, BranchPolicy policy);

  CVector operator()(cplx z) const;

private:
  GroupElement g_inverse_;
  std::function<CVector(cplx)> f_;
  ModelParams params_;
  TriangularRep rep_;
  BranchPolicy policy_;
};

TransformedSection act_U(const GroupElement &g, const VectorPolynomial &f,
                         const ModelParams &params,
                         BranchPolicy policy = BranchPolicy::strict);

/// || J_{gh}(z) - J_h(z) J_g(h.z) ||_F.
double check_cocycle(const GroupElement &g, const GroupElement &h, cplx z,
                     const ModelParams &params, const TriangularRep &rep);

} // namespace cdhom
