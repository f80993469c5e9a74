// Acceptance suite: one PASS/FAIL line per criterion.
// usage: acceptance <path to cdhom executable>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cdhom/basis.hpp"
#include "cdhom/errors.hpp"
#include "cdhom/kernel.hpp"
#include "cdhom/shift_operator.hpp"
#include "cdhom/transcribed.hpp"

using namespace cdhom;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double max_abs(const CMatrix &a) { return a.cwiseAbs().maxCoeff(); }

const std::vector<double> kLambdaM1 = {0.75, 1.0, 2.0};
const std::vector<double> kLambdaM2 = {1.25, 1.6, 2.5};
const std::vector<double> kMuValues = {0.5, 1.0, 2.0};

std::vector<ModelParams> oracle_tuples() {
  return {ModelParams(1.0, {1, 1}), ModelParams(2.0, {1, 0.5}),
          ModelParams(1.6, {1, 0.7, 1.3}), ModelParams(2.25, {1, 1, 1, 1})};
}

std::vector<ModelParams> golden_sweep() {
  std::vector<ModelParams> out;
  for (double l : kLambdaM1)
    for (double a : kMuValues)
      out.emplace_back(l, std::vector<double>{1, a});
  for (double l : kLambdaM2)
    for (double a : kMuValues)
      for (double b : kMuValues)
        out.emplace_back(l, std::vector<double>{1, a, b});
  return out;
}

std::vector<GroupElement> one_parameter(double t_max) {
  std::vector<GroupElement> out;
  for (const auto &X : {LieAlgebraElement::X0(), LieAlgebraElement::X1(),
                        LieAlgebraElement::Y()})
    for (double t : {-t_max, -t_max / 2, t_max / 2, t_max})
      out.push_back(exp_basis(X, t));
  return out;
}

Outcome golden_g() {
  double worst = 0.0;
  for (double l : kLambdaM1)
    for (int n = 0; n <= 20; ++n)
      worst = std::max(worst, (g_matrix(n, ModelParams(l, {1, 1})).entries -
                               transcribed::g2(n, l)).cwiseAbs().maxCoeff());
  for (double l : kLambdaM2)
    for (int n = 0; n <= 20; ++n)
      worst = std::max(worst, (g_matrix(n, ModelParams(l, {1, 1, 1})).entries -
                               transcribed::g3(n, l)).cwiseAbs().maxCoeff());
  return {worst <= 1e-12, "max " + sci(worst) + " tol 1e-12"};
}

Outcome golden_w() {
  double worst = 0.0;
  for (const auto &p : golden_sweep()) {
    const int m = p.m();
    for (int n = 0; n <= 20; ++n) {
      const RMatrix W = shift_block(n, p);
      const RMatrix golden =
          m == 1 ? transcribed::w2(n, p.lambda(), p.mu(1))
                 : transcribed::w3(n, p.lambda(), p.mu(1), p.mu(2));
      // columns j > n carry no basis vector
      for (int r = 0; r <= std::min(n + 1, m); ++r)
        for (int c = 0; c <= std::min(n, m); ++c)
          worst = std::max(worst, std::abs(W(r, c) - golden(r, c)));
    }
  }
  return {worst <= 1e-12, "max " + sci(worst) + " tol 1e-12"};
}

Outcome golden_k() {
  const auto pts = SampleGrid::random(20, 0.5, 20240611);
  double worst = 0.0;
  for (const auto &p : golden_sweep())
    for (int i = 0; i < 10; ++i) {
      const cplx z = pts.points()[2 * i], w = pts.points()[2 * i + 1];
      const CMatrix golden =
          p.m() == 1 ? transcribed::k2(z, w, p.lambda(), p.mu(1))
                     : transcribed::k3(z, w, p.lambda(), p.mu(1), p.mu(2));
      worst = std::max(worst, max_abs(kernel_full(z, w, p).matrix - golden));
    }
  return {worst <= 1e-10, "max " + sci(worst) + " tol 1e-10"};
}

Outcome series_oracle() {
  const auto grid = SampleGrid::default_grid();
  double worst = 0.0;
  for (const auto &p : oracle_tuples())
    for (cplx z : grid.points())
      for (cplx w : grid.points())
        worst = std::max(worst, max_abs(kernel_series(z, w, p, 60).matrix -
                                        kernel_full(z, w, p).matrix));
  return {worst <= 1e-8, "max " + sci(worst) + " tol 1e-8"};
}

Outcome u_recursion() {
  double worst = 0.0;
  for (int m = 0; m <= 4; ++m) {
    const ModelParams p(0.5 * m + 0.7, std::vector<double>(m + 1, 1.0));
    for (int j = 0; j <= m; ++j)
      for (int n = 0; n <= 15; ++n) {
        const auto closed = u_closed(j, n, p).poly;
        const auto rec = u_recursive(j, n, p).poly;
        worst = std::max(worst, max_abs_difference(closed, rec) /
                                    std::max(1.0, closed.max_abs_coeff()));
      }
  }
  return {worst <= 1e-10, "max relative " + sci(worst) + " tol 1e-10"};
}

VectorPolynomial seeded_polynomial(std::mt19937_64 &rng, int m, int degree) {
  const auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  CMatrix c(degree + 1, m + 1);
  for (int n = 0; n <= degree; ++n)
    for (int l = 0; l <= m; ++l)
      c(n, l) = {2 * u() - 1, 2 * u() - 1};
  return {m, c};
}

Outcome sl2_relations() {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  const auto rel = [](const VectorPolynomial &r, const VectorPolynomial &s) {
    return r.max_abs_coeff() / std::max(1.0, s.max_abs_coeff());
  };
  for (const auto &p : oracle_tuples()) {
    const TriangularRep rep(p);
    for (int i = 0; i < 4; ++i) {
      const auto f = seeded_polynomial(rng, p.m(), 15);
      const auto Ef = op_E(f), Hf = op_H(f, rep), Ff = op_F(f, rep);
      const auto HE = op_H(Ef, rep), HF = op_H(Ff, rep), EF = op_E(Ff);
      worst = std::max(worst, rel(HE - op_E(Hf) - Ef, HE));
      worst = std::max(worst, rel(HF - op_F(Hf, rep) + Ff, HF));
      worst = std::max(worst, rel(EF - op_F(Ef, rep) + 2.0 * Hf, EF));
    }
  }
  return {worst <= 1e-10, "max relative " + sci(worst) + " tol 1e-10"};
}

Outcome cocycle_and_quasi_invariance() {
  const auto grid = SampleGrid::default_grid();
  const auto samples = one_parameter(0.2);
  double cocycle = 0.0, quasi = 0.0;
  for (const auto &p : oracle_tuples()) {
    const TriangularRep rep(p);
    for (const auto &g : samples) {
      for (const auto &h : samples)
        for (cplx z : grid.points())
          cocycle = std::max(cocycle, check_cocycle(g, h, z, p, rep));
      quasi = std::max(quasi, check_quasi_invariance(g, grid, p, rep));
    }
  }
  return {cocycle <= 1e-10 && quasi <= 1e-8,
          "cocycle " + sci(cocycle) + " tol 1e-10, quasi-invariance " +
              sci(quasi) + " tol 1e-8"};
}

Outcome positive_definite() {
  const auto grid = SampleGrid::default_grid();
  double lowest = INFINITY;
  bool ok = true;
  std::vector<ModelParams> sweep = oracle_tuples();
  for (int m = 0; m <= 4; ++m)
    sweep.emplace_back(0.5 * m + 0.05, std::vector<double>(m + 1, 0.8));
  for (const auto &p : sweep) {
    const auto r = check_positive_definite(p, grid);
    ok = ok && r.pass;
    lowest = std::min(lowest, r.min_eigenvalue);
  }
  // 2 lambda = m must be rejected with a diagnostic
  std::string negative;
  bool negative_ok = false;
  try {
    const auto r = check_positive_definite(
        ModelParams(0.5, {1, 1}, Degenerate::allow), grid);
    negative_ok = !r.pass && !r.diagnostic.empty();
    negative = r.diagnostic;
  } catch (const NormalizationFailure &e) {
    negative_ok = true;
    negative = e.what();
  }
  return {ok && negative_ok, "min eigenvalue " + sci(lowest) +
                                 " floor -1e-10, degenerate: " + negative};
}

Outcome homogeneity() {
  double rotation = 0.0;
  for (const auto &p : oracle_tuples()) {
    const TriangularRep rep(p);
    for (double theta : {0.3, 1.7})
      rotation = std::max(
          rotation,
          check_homogeneity(GroupElement::rotation(theta), p, rep, 60).residual);
  }
  const ModelParams p(1.0, {1, 0.8});
  const TriangularRep rep(p);
  const auto g = exp_basis(LieAlgebraElement::X1(), 0.05);
  std::vector<double> interior;
  for (int N : {20, 40, 60})
    interior.push_back(check_homogeneity(g, p, rep, N).residual);
  const bool monotone = interior[1] <= interior[0] + 1e-12 &&
                        interior[2] <= interior[1] + 1e-12;
  return {rotation <= 1e-10 && interior[1] <= 1e-4 && monotone,
          "rotation " + sci(rotation) + " tol 1e-10, N=20/40/60 interior " +
              sci(interior[0]) + "/" + sci(interior[1]) + "/" +
              sci(interior[2]) + " (N=40 tol 1e-4, non-increasing " +
              (monotone ? "yes" : "no") + ")"};
}

struct Run {
  int code = -1;
  std::string out;
};

Run invoke(const std::string &tool, const std::string &args) {
  Run r;
  const std::string cmd = "'" + tool + "' " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli_contract(const std::string &tool) {
  const Run a = invoke(tool, "verify --seed 3");
  const Run b = invoke(tool, "verify --seed 3");
  const bool deterministic = !a.out.empty() && a.out == b.out;
  struct Case {
    const char *args;
    int expected;
  };
  const std::vector<Case> cases = {
      {"verify", 0},
      {"verify --lambda 0.5 --m 1 --allow-degenerate", 1},
      {"kernel-eval --z 1.5", 2},
      {"verify --lambda 0.4 --m 1", 3},
      {"verify --suite bogus", 3},
  };
  std::ostringstream detail;
  detail << "deterministic " << (deterministic ? "yes" : "no") << ", exit codes";
  bool ok = deterministic;
  for (const auto &c : cases) {
    const int got = c.expected == 0 ? a.code : invoke(tool, c.args).code;
    detail << ' ' << got;
    ok = ok && got == c.expected;
  }
  detail << " (want 0 1 2 3 3)";
  return {ok, detail.str()};
}

} // namespace

int main(int argc, char **argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <cdhom executable>\n", argv[0]);
    return 2;
  }
  const std::string tool = argv[1];
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"golden_G", golden_g},
      {"golden_W", golden_w},
      {"golden_K", golden_k},
      {"kernel_series_oracle", series_oracle},
      {"u_closed_vs_recursion", u_recursion},
      {"sl2_relations", sl2_relations},
      {"cocycle_quasi_invariance", cocycle_and_quasi_invariance},
      {"positive_definiteness", positive_definite},
      {"homogeneity_at_truncation", homogeneity},
      {"cli_determinism_exit_codes", [&] { return cli_contract(tool); }},
  };
  int failed = 0;
  for (const auto &[name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
