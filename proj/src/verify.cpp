#include "cdhom/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "cdhom/basis.hpp"
#include "cdhom/errors.hpp"
#include "cdhom/kernel.hpp"
#include "cdhom/shift_operator.hpp"
#include "cdhom/transcribed.hpp"

namespace cdhom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Bit-exact across standard libraries, unlike uniform_real_distribution.
double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double max_abs(const CMatrix &a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

VectorPolynomial seeded_polynomial(std::mt19937_64 &rng, int m, int degree) {
  CMatrix c(degree + 1, m + 1);
  for (int n = 0; n <= degree; ++n)
    for (int l = 0; l <= m; ++l)
      c(n, l) = {2 * unit_uniform(rng) - 1, 2 * unit_uniform(rng) - 1};
  return {m, c};
}

std::vector<GroupElement> one_parameter_samples() {
  std::vector<GroupElement> out;
  for (const auto &X : {LieAlgebraElement::X0(), LieAlgebraElement::X1(),
                        LieAlgebraElement::Y()})
    for (double t : {-0.2, -0.1, 0.1, 0.2})
      out.push_back(exp_basis(X, t));
  return out;
}

// Parameters with mu rescaled so mu_0 = 1; shift blocks only see ratios.
ModelParams unit_mu0(const ModelParams &p) {
  std::vector<double> mu = p.mu();
  const double mu0 = mu[0];
  for (double &v : mu)
    v /= mu0;
  return {p.lambda(), mu,
          p.degenerate_allowed() ? Degenerate::allow : Degenerate::reject};
}

struct Context {
  const VerifyConfig &config;
  const ModelParams &params;
  TriangularRep rep;
  SampleGrid grid;
};

using CheckBody = std::function<double(const Context &, CheckRecord &)>;

struct CheckDef {
  const char *name;
  const char *suite;
  double tolerance;
  CheckBody body;
};

// --- kernel ---------------------------------------------------------------

double kernel_golden(const Context &c, CheckRecord &rec) {
  const auto &p = c.params;
  const auto pts = SampleGrid::random(20, c.config.r_max, c.config.seed);
  double worst = 0.0;
  const double mu0sq = p.mu(0) * p.mu(0);
  for (int i = 0; i < 10; ++i) {
    const cplx z = pts.points()[2 * i];
    const cplx w = pts.points()[2 * i + 1];
    const CMatrix K = kernel_full(z, w, p).matrix / mu0sq;
    const CMatrix golden =
        p.m() == 1 ? transcribed::k2(z, w, p.lambda(), p.mu(1) / p.mu(0))
                   : transcribed::k3(z, w, p.lambda(), p.mu(1) / p.mu(0),
                                     p.mu(2) / p.mu(0));
    worst = std::max(worst, max_abs(K - golden));
  }
  rec.parameters["pairs"] = 10;
  rec.parameters["formula"] = p.m() == 1 ? "K2" : "K3";
  return worst;
}

double kernel_series_oracle(const Context &c, CheckRecord &rec) {
  double worst = 0.0;
  for (cplx z : c.grid.points())
    for (cplx w : c.grid.points())
      worst = std::max(
          worst, max_abs(kernel_series(z, w, c.params, c.config.truncation).matrix -
                         kernel_full(z, w, c.params).matrix));
  rec.parameters["N"] = c.config.truncation;
  rec.parameters["grid_points"] = c.grid.size();
  return worst;
}

double kernel_hermitian(const Context &c, CheckRecord &) {
  double worst = 0.0;
  for (cplx z : c.grid.points())
    for (cplx w : c.grid.points()) {
      const CMatrix a = kernel_full(z, w, c.params).matrix;
      const CMatrix b = kernel_full(w, z, c.params).matrix.adjoint();
      worst = std::max(worst, max_abs(a - b) / std::max(1.0, max_abs(a)));
    }
  return worst;
}

double kernel_positive_definite(const Context &c, CheckRecord &rec) {
  const auto r = check_positive_definite(c.params, c.grid, rec.tolerance);
  if (!r.diagnostic.empty())
    rec.diagnostic = r.diagnostic;
  rec.parameters["min_eigenvalue"] = r.min_eigenvalue;
  if (!std::isfinite(r.min_eigenvalue))
    return kNaN;
  return std::max(0.0, -r.min_eigenvalue);
}

double kernel_quasi_invariance(const Context &c, CheckRecord &rec) {
  double worst = 0.0;
  for (const auto &g : one_parameter_samples())
    worst = std::max(worst, check_quasi_invariance(g, c.grid, c.params, c.rep));
  rec.parameters["generators"] = "X0,X1,Y";
  rec.parameters["t"] = "-0.2,-0.1,0.1,0.2";
  return worst;
}

double kernel_normalization(const Context &c, CheckRecord &rec) {
  const auto r = normalize_kernel(c.params, c.grid);
  rec.parameters["phi0_residual"] = r.phi0_residual;
  rec.parameters["rotation_multiplier_residual"] = r.rotation_multiplier_residual;
  return std::max({r.residual, r.phi0_residual, r.rotation_multiplier_residual});
}

// --- shift ----------------------------------------------------------------

double shift_golden_g(const Context &c, CheckRecord &rec) {
  const auto &p = c.params;
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const RMatrix golden = p.m() == 1 ? transcribed::g2(n, p.lambda())
                                      : transcribed::g3(n, p.lambda());
    worst = std::max(worst,
                     (g_matrix(n, p).entries - golden).cwiseAbs().maxCoeff());
  }
  rec.parameters["n_max"] = 20;
  rec.parameters["formula"] = p.m() == 1 ? "G2" : "G3";
  return worst;
}

double shift_golden_w(const Context &c, CheckRecord &rec) {
  const ModelParams p = unit_mu0(c.params);
  const int m = p.m();
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const RMatrix W = shift_block(n, p);
    const RMatrix golden = m == 1 ? transcribed::w2(n, p.lambda(), p.mu(1))
                                  : transcribed::w3(n, p.lambda(), p.mu(1), p.mu(2));
    for (int r = 0; r <= std::min(n + 1, m); ++r)
      for (int col = 0; col <= std::min(n, m); ++col)
        worst = std::max(worst, std::abs(W(r, col) - golden(r, col)));
  }
  rec.parameters["n_max"] = 20;
  rec.parameters["formula"] = m == 1 ? "W2" : "W3";
  return worst;
}

double shift_structure(const Context &c, CheckRecord &rec) {
  const int m = c.params.m();
  double upper = 0.0;
  int bad_diagonal = 0;
  for (int n = 0; n <= c.config.truncation; ++n) {
    const RMatrix W = shift_block(n, c.params);
    for (int r = 0; r <= m; ++r)
      for (int col = r + 1; col <= m; ++col)
        upper = std::max(upper, std::abs(W(r, col)));
    if (n >= m)
      for (int j = 0; j <= m; ++j)
        if (!(W(j, j) > 0.0))
          ++bad_diagonal;
  }
  rec.parameters["n_max"] = c.config.truncation;
  rec.parameters["non_positive_diagonal"] = bad_diagonal;
  if (bad_diagonal > 0) {
    rec.diagnostic = "W(n) has non-positive diagonal entries for n >= m";
    return kNaN;
  }
  return upper;
}

double shift_column_action(const Context &c, CheckRecord &rec) {
  const auto &p = c.params;
  const int N = std::min(c.config.truncation, 20);
  const auto T = truncate(p, N);
  const auto &idx = T.index;
  double worst = 0.0;
  for (cplx z : c.grid.points())
    for (int n = 0; n < N; ++n)
      for (int j = 0; j < idx.block_size(n); ++j) {
        CVector image = CVector::Zero(p.m() + 1);
        for (int i = 0; i < idx.block_size(n + 1); ++i)
          image += T.matrix(idx.position(n + 1, i), idx.position(n, j)) * p.mu(i) *
                   e_basis(i, n + 1, p).poly(z);
        const CVector target = z * p.mu(j) * e_basis(j, n, p).poly(z);
        worst = std::max(worst, (image - target).cwiseAbs().maxCoeff() /
                                    std::max(1.0, target.cwiseAbs().maxCoeff()));
      }
  rec.parameters["N"] = N;
  return worst;
}

double shift_norm_bound(const Context &c, CheckRecord &rec) {
  const int N = c.config.truncation;
  const auto T = truncate(c.params, N);
  double largest = 0.0;
  for (int n = 0; n < N; ++n)
    largest = std::max(largest,
                       spectral_norm(T.matrix.block(
                           T.index.offset(n + 1), T.index.offset(n),
                           T.index.block_size(n + 1), T.index.block_size(n))));
  const double norm = spectral_norm(T.matrix);
  rec.parameters["N"] = N;
  rec.parameters["operator_norm"] = norm;
  rec.parameters["max_block_norm"] = largest;
  return std::abs(norm - largest);
}

// --- rep ------------------------------------------------------------------

double rep_commutator(const Context &c, CheckRecord &) {
  const RMatrix &H = c.rep.rho_h();
  const RMatrix &Y = c.rep.rho_y();
  return (H * Y - Y * H + Y).cwiseAbs().maxCoeff();
}

double rep_cocycle(const Context &c, CheckRecord &rec) {
  std::vector<GroupElement> samples;
  for (const auto &X : {LieAlgebraElement::x(), LieAlgebraElement::y(),
                        LieAlgebraElement::X0(), LieAlgebraElement::X1(),
                        LieAlgebraElement::Y()})
    for (double t : {-0.2, -0.1, 0.1, 0.2})
      samples.push_back(exp_basis(X, t));
  const double step = 0.7 * c.config.r_max / 2.0;
  double worst = 0.0;
  for (const auto &g : samples)
    for (const auto &h : samples)
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
          const cplx z{(a - 2) * step, (b - 2) * step};
          worst = std::max(worst, check_cocycle(g, h, z, c.params, c.rep));
        }
  rec.parameters["grid"] = "5x5";
  rec.parameters["pairs"] = samples.size() * samples.size();
  return worst;
}

double rep_holomorphic(const Context &c, CheckRecord &) {
  const double h = 1e-5;
  double worst = 0.0;
  for (const auto &g : one_parameter_samples())
    for (cplx z : c.grid.points()) {
      const CMatrix dx = (multiplier_J0(g, z + h, c.rep) -
                          multiplier_J0(g, z - h, c.rep)) / (2 * h);
      const CMatrix dy = (multiplier_J0(g, z + cplx{0, h}, c.rep) -
                          multiplier_J0(g, z - cplx{0, h}, c.rep)) / (2 * h);
      worst = std::max(worst, max_abs(dx + cplx{0, 1} * dy));
    }
  return worst;
}

double rep_rotation_multiplier(const Context &c, CheckRecord &) {
  const int b = c.params.m() + 1;
  double worst = 0.0;
  for (double theta : {-1.3, 0.4, 2.2}) {
    const auto k = GroupElement::rotation(theta);
    const CMatrix inv0 = multiplier_J(k, 0.0, c.params, c.rep).inverse();
    for (cplx z : c.grid.points())
      worst = std::max(worst, max_abs(multiplier_J(k, z, c.params, c.rep) * inv0 -
                                      CMatrix::Identity(b, b)));
  }
  return worst;
}

double rep_sl2_relations(const Context &c, CheckRecord &rec) {
  std::mt19937_64 rng(c.config.seed);
  double worst = 0.0;
  const auto rel = [](const VectorPolynomial &r, const VectorPolynomial &s) {
    return r.max_abs_coeff() / std::max(1.0, s.max_abs_coeff());
  };
  for (int i = 0; i < 4; ++i) {
    const auto f = seeded_polynomial(rng, c.params.m(), 15);
    const auto Ef = op_E(f), Hf = op_H(f, c.rep), Ff = op_F(f, c.rep);
    const auto HE = op_H(Ef, c.rep), HF = op_H(Ff, c.rep), EF = op_E(Ff);
    worst = std::max(worst, rel(HE - op_E(Hf) - Ef, HE));
    worst = std::max(worst, rel(HF - op_F(Hf, c.rep) + Ff, HF));
    worst = std::max(worst, rel(EF - op_F(Ef, c.rep) + 2.0 * Hf, EF));
  }
  rec.parameters["degree"] = 15;
  return worst;
}

double rep_recursion(const Context &c, CheckRecord &rec) {
  double worst = 0.0;
  for (int j = 0; j <= c.params.m(); ++j)
    for (int n = 0; n <= 15; ++n) {
      const auto next = minus_F(u_closed(j, n, c.params).poly, c.params, c.rep);
      const auto closed = u_closed(j, n + 1, c.params).poly;
      worst = std::max(worst, max_abs_difference(next, closed) /
                                  std::max(1.0, closed.max_abs_coeff()));
    }
  rec.parameters["n_max"] = 15;
  return worst;
}

double rep_h_ladder(const Context &c, CheckRecord &rec) {
  const int N = std::min(c.config.truncation, 20);
  double worst = 0.0;
  for (int n = 0; n <= N; ++n)
    for (int j = 0; j <= std::min(n, c.params.m()); ++j) {
      const auto e = e_basis(j, n, c.params).poly;
      const auto r = op_H(e, c.rep) + (c.params.eta() + n) * e;
      worst = std::max(worst, r.max_abs_coeff() / std::max(1.0, e.max_abs_coeff()));
    }
  rec.parameters["n_max"] = N;
  return worst;
}

// --- operator -------------------------------------------------------------

double op_rotation_homogeneity(const Context &c, CheckRecord &rec) {
  const int N = c.config.truncation;
  double worst = 0.0, reverse = 0.0;
  for (double theta : {0.3, 1.7}) {
    const auto r = check_homogeneity(GroupElement::rotation(theta), c.params,
                                     c.rep, N);
    worst = std::max(worst, r.residual);
    reverse = std::max(reverse, r.reverse_residual);
  }
  rec.parameters["N"] = N;
  rec.parameters["guard"] = 5;
  rec.parameters["reverse_orientation_residual"] = reverse;
  return worst;
}

double op_homogeneity(const Context &c, CheckRecord &rec) {
  const int N = 40;
  const auto r = check_homogeneity(exp_basis(LieAlgebraElement::X1(), 0.05),
                                   c.params, c.rep, N);
  rec.parameters["g"] = "exp(0.05 X1)";
  rec.parameters["N"] = N;
  rec.parameters["guard"] = 5;
  rec.parameters["truncation_loss"] = r.truncation_loss;
  return r.residual;
}

double op_unitarity(const Context &c, CheckRecord &rec) {
  const int N = 20;
  double worst = 0.0;
  for (const auto &X : {LieAlgebraElement::X1(), LieAlgebraElement::Y()})
    worst = std::max(worst, check_unitarity(exp_basis(X, 0.1), c.params, c.rep, N));
  rec.parameters["t"] = 0.1;
  rec.parameters["N"] = N;
  rec.parameters["guard"] = 5;
  return worst;
}

double op_calculus(const Context &c, CheckRecord &) {
  const CMatrix T = truncate(c.params, std::min(c.config.truncation, 30)).matrix;
  double worst = 0.0;
  for (double theta : {-0.8, 0.5})
    worst = std::max(worst, max_abs(mobius_calculus(GroupElement::rotation(theta), T) -
                                    std::polar(1.0, theta) * T));
  return worst;
}

double op_adjoint_eigenvector(const Context &c, CheckRecord &rec) {
  const int N = c.config.truncation;
  const auto pts = SampleGrid::random(4, 0.3, c.config.seed + 1);
  double worst = 0.0;
  for (cplx w : pts.points())
    for (int l = 0; l <= c.params.m(); ++l) {
      CVector xi = CVector::Zero(c.params.m() + 1);
      xi(l) = 1.0;
      worst = std::max(worst, check_adjoint_eigenvector(c.params, w, xi, N));
    }
  rec.parameters["N"] = N;
  rec.parameters["w_radius"] = 0.3;
  return worst;
}

bool golden_available(const Context &c) {
  return c.params.m() == 1 || c.params.m() == 2;
}

const std::vector<CheckDef> &registry() {
  static const std::vector<CheckDef> checks = {
      {"kernel.golden", "kernel", 1e-10, kernel_golden},
      {"kernel.series_oracle", "kernel", 1e-8, kernel_series_oracle},
      {"kernel.hermitian", "kernel", 1e-12, kernel_hermitian},
      {"kernel.positive_definite", "kernel", 1e-10, kernel_positive_definite},
      {"kernel.quasi_invariance", "kernel", 1e-8, kernel_quasi_invariance},
      {"kernel.normalization", "kernel", 1e-10, kernel_normalization},
      {"shift.golden_g", "shift", 1e-12, shift_golden_g},
      {"shift.golden_w", "shift", 1e-12, shift_golden_w},
      {"shift.structure", "shift", 0.0, shift_structure},
      {"shift.column_action", "shift", 1e-12, shift_column_action},
      {"shift.norm_bound", "shift", 1e-12, shift_norm_bound},
      {"rep.commutator", "rep", 1e-14, rep_commutator},
      {"rep.cocycle", "rep", 1e-10, rep_cocycle},
      {"rep.holomorphic", "rep", 1e-6, rep_holomorphic},
      {"rep.rotation_multiplier", "rep", 1e-10, rep_rotation_multiplier},
      {"rep.sl2_relations", "rep", 1e-10, rep_sl2_relations},
      {"rep.recursion", "rep", 1e-10, rep_recursion},
      {"rep.h_ladder", "rep", 1e-12, rep_h_ladder},
      {"operator.rotation_homogeneity", "operator", 1e-10, op_rotation_homogeneity},
      {"operator.homogeneity", "operator", 1e-4, op_homogeneity},
      {"operator.unitarity", "operator", 1e-6, op_unitarity},
      {"operator.calculus", "operator", 1e-13, op_calculus},
      {"operator.adjoint_eigenvector", "operator", 1e-6, op_adjoint_eigenvector},
  };
  return checks;
}

bool needs_golden(const std::string &name) {
  return name == "kernel.golden" || name == "shift.golden_g" ||
         name == "shift.golden_w";
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {"kernel", "shift", "rep",
                                                 "operator"};
  return names;
}

const std::map<std::string, double> &default_tolerances() {
  static const std::map<std::string, double> table = [] {
    std::map<std::string, double> t;
    for (const auto &c : registry())
      t[c.name] = c.tolerance;
    return t;
  }();
  return table;
}

std::vector<CheckRecord> run_verification(const VerifyConfig &config,
                                          const std::string &suite) {
  if (suite != "all") {
    bool known = false;
    for (const auto &s : suite_names())
      known = known || s == suite;
    if (!known)
      throw ConfigError("unknown suite '" + suite + "'");
  }
  for (const auto &[name, value] : config.tolerances) {
    if (!default_tolerances().count(name))
      throw ConfigError("unknown check '" + name + "' in --tol");
    if (!(value >= 0.0))
      throw ConfigError("tolerance for '" + name + "' must be non-negative");
  }
  if (config.truncation < 6)
    throw ConfigError("truncation must be at least 6");

  const Context ctx{config, config.params, TriangularRep(config.params),
                    SampleGrid::default_grid(config.r_max)};

  std::vector<CheckRecord> records;
  for (const auto &def : registry()) {
    if (suite != "all" && suite != def.suite)
      continue;
    if (needs_golden(def.name) && !golden_available(ctx))
      continue;
    CheckRecord rec;
    rec.name = def.name;
    rec.suite = def.suite;
    const auto over = config.tolerances.find(def.name);
    rec.tolerance = over != config.tolerances.end() ? over->second : def.tolerance;
    try {
      rec.residual = def.body(ctx, rec);
    } catch (const NormalizationFailure &e) {
      rec.residual = kNaN;
      rec.diagnostic = e.what();
    } catch (const SingularG &e) {
      rec.residual = kNaN;
      rec.diagnostic = e.what();
    } catch (const SingularKernelColumn &e) {
      rec.residual = kNaN;
      rec.diagnostic = e.what();
    }
    rec.pass = std::isfinite(rec.residual) && rec.residual <= rec.tolerance;
    records.push_back(std::move(rec));
  }
  return records;
}

} // namespace cdhom
