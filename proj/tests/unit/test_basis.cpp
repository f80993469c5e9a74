#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cdhom/basis.hpp"
#include "cdhom/errors.hpp"
#include "cdhom/scalar_math.hpp"
#include "cdhom/transcribed.hpp"
#include "test_support.hpp"

using namespace cdhom;

namespace {

ModelParams params_for(int m, double lambda) {
  std::vector<double> mu(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= m; ++j)
    mu[static_cast<std::size_t>(j)] = 1.0 / (1.0 + j);
  return {lambda, mu};
}

VectorPolynomial poly2(cplx c0, int d0, cplx c1, int d1) {
  return VectorPolynomial::monomial(1, 0, d0, c0) +
         VectorPolynomial::monomial(1, 1, d1, c1);
}

double relative_difference(const VectorPolynomial &a, const VectorPolynomial &b) {
  return max_abs_difference(a, b) /
         std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
}

} // namespace

TEST_CASE("op_E examples") {
  CHECK(op_E(VectorPolynomial::monomial(2, 1, 0)).is_zero());
  CHECK(max_abs_difference(op_E(VectorPolynomial::monomial(1, 0, 2)),
                           VectorPolynomial::monomial(1, 0, 1, -2.0)) == 0.0);
  const double lambda = 1.3;
  const ModelParams p(lambda, {1.0, 1.0});
  const auto e = op_E(u_closed(0, 1, p).poly);
  CHECK(std::abs(e.coeff(0, 0) + (2 * lambda - 1)) < 1e-15);
  CHECK(e.coeff(0, 1) == cplx{0.0});
  CHECK(e.degree() == 0);
}

TEST_CASE("op_H examples") {
  const ModelParams p(1.0, {1.0, 1.0});
  const TriangularRep rep(p);
  for (int j = 0; j <= 1; ++j)
    for (int n = 0; n <= 5; ++n) {
      const auto f = VectorPolynomial::monomial(1, j, n);
      const auto expected = -(p.eta() + j + n) * f;
      CHECK(max_abs_difference(op_H(f, rep), expected) < 1e-15);
    }
  CHECK(std::abs(op_H(VectorPolynomial::monomial(1, 1, 1), rep).coeff(1, 1) +
                 2.5) < 1e-15);
  CHECK(std::abs(op_H(VectorPolynomial::monomial(1, 0, 0), rep).coeff(0, 0) +
                 p.eta()) < 1e-15);
}

TEST_CASE("op_F and minus_F examples") {
  for (double lambda : {0.8, 1.0, 2.5}) {
    const ModelParams p(lambda, {1.0, 1.0});
    const TriangularRep rep(p);
    const auto mf = minus_F(VectorPolynomial::monomial(1, 0, 0), p, rep);
    CHECK(max_abs_difference(mf, poly2(2 * lambda - 1, 1, 1.0, 0)) < 1e-15);
    CHECK(minus_F(VectorPolynomial(1), p, rep).is_zero());
  }
  const ModelParams p(1.0, {1.0, 1.0});
  const TriangularRep rep(p);
  const auto u2 = minus_F(u_closed(0, 1, p).poly, p, rep);
  CHECK(max_abs_difference(u2, poly2(2.0, 2, 4.0, 1)) < 1e-15);
}

TEST_CASE("op_F is the negative of minus_F") {
  std::mt19937_64 rng(1);
  for (int m = 0; m <= 4; ++m) {
    const auto p = params_for(m, 0.5 * m + 0.6);
    const TriangularRep rep(p);
    for (int i = 0; i < 5; ++i) {
      const auto f = testing::random_polynomial(rng, m, 7);
      CHECK(max_abs_difference(op_F(f, rep) + minus_F(f, p, rep),
                               VectorPolynomial(m)) < 1e-12);
    }
  }
}

TEST_CASE("u_closed examples") {
  for (int m = 0; m <= 3; ++m) {
    const auto p = params_for(m, 0.5 * m + 1.0);
    for (int j = 0; j <= m; ++j)
      CHECK(max_abs_difference(u_closed(j, 0, p).poly,
                               VectorPolynomial::monomial(m, j, 0)) == 0.0);
  }
  const double lambda = 1.7;
  const ModelParams p1(lambda, {1.0, 1.0});
  CHECK(max_abs_difference(u_closed(0, 1, p1).poly,
                           poly2(2 * lambda - 1, 1, 1.0, 0)) < 1e-15);

  // Hand computation of (-F)^2 eps_1 for m = 2, lambda = 1.5:
  // -F eps_1 = (0, 3z, 2), then -F (0, 3z, 2) = (0, 12 z^2, 16 z).
  const ModelParams p2(1.5, {1.0, 1.0, 1.0});
  const auto u = u_closed(1, 2, p2);
  const auto expected = VectorPolynomial::monomial(2, 1, 2, 12.0) +
                        VectorPolynomial::monomial(2, 2, 1, 16.0);
  CHECK(max_abs_difference(u.poly, expected) < 1e-14);
  CHECK(max_abs_difference(u_recursive(1, 2, p2).poly, expected) < 1e-14);
}

TEST_CASE("u_closed component structure") {
  const auto p = params_for(4, 2.6);
  for (int j = 0; j <= 4; ++j)
    for (int n = 0; n <= 8; ++n) {
      const auto u = u_closed(j, n, p).poly;
      for (int l = 0; l <= 4; ++l)
        for (int d = 0; d <= u.degree(); ++d) {
          const bool allowed = l >= j && l - j <= n && d == n - (l - j);
          if (!allowed)
            CHECK(u.coeff(d, l) == cplx{0.0});
          else
            CHECK(u.coeff(d, l).real() > 0.0);
        }
    }
}

TEST_CASE("minus_F recursion agrees with the closed form") {
  for (int m = 0; m <= 4; ++m)
    for (double extra : {0.1, 0.5, 1.9}) {
      const auto p = params_for(m, 0.5 * m + extra);
      const TriangularRep rep(p);
      double worst = 0.0;
      for (int j = 0; j <= m; ++j)
        for (int n = 0; n <= 15; ++n) {
          const auto next = minus_F(u_closed(j, n, p).poly, p, rep);
          worst = std::max(worst,
                           relative_difference(next, u_closed(j, n + 1, p).poly));
        }
      CHECK(worst <= 1e-10);
      for (int j = 0; j <= m; ++j)
        CHECK(relative_difference(u_recursive(j, 12, p).poly,
                                  u_closed(j, 12, p).poly) <= 1e-10);
    }
}

TEST_CASE("sl(2) commutation relations") {
  std::mt19937_64 rng(9);
  for (int m = 0; m <= 3; ++m) {
    const auto p = params_for(m, 0.5 * m + 0.9);
    const TriangularRep rep(p);
    for (int i = 0; i < 4; ++i) {
      const auto f = testing::random_polynomial(rng, m, 15);
      const auto E = [](const VectorPolynomial &g) { return op_E(g); };
      const auto H = [&](const VectorPolynomial &g) { return op_H(g, rep); };
      const auto F = [&](const VectorPolynomial &g) { return op_F(g, rep); };
      const auto scale = [](const VectorPolynomial &a) {
        return std::max(1.0, a.max_abs_coeff());
      };
      const auto he = H(E(f)) - E(H(f)) - E(f);
      CHECK(he.max_abs_coeff() / scale(H(E(f))) <= 1e-10);
      const auto hf = H(F(f)) - F(H(f)) + F(f);
      CHECK(hf.max_abs_coeff() / scale(H(F(f))) <= 1e-10);
      const auto ef = E(F(f)) - F(E(f)) + 2.0 * H(f);
      CHECK(ef.max_abs_coeff() / scale(E(F(f))) <= 1e-10);
    }
  }
}

TEST_CASE("kernel of E is the constants") {
  std::mt19937_64 rng(19);
  for (int m = 0; m <= 3; ++m) {
    CHECK(op_E(testing::random_polynomial(rng, m, 0)).is_zero());
    for (int d = 1; d <= 6; ++d)
      CHECK_FALSE(op_E(testing::random_polynomial(rng, m, d)).is_zero());
  }
}

TEST_CASE("H acts on e_basis by -(eta + n)") {
  for (int m = 0; m <= 3; ++m) {
    const auto p = params_for(m, 0.5 * m + 1.2);
    const TriangularRep rep(p);
    for (int n = 0; n <= 14; ++n)
      for (int j = 0; j <= std::min(n, m); ++j) {
        const auto e = e_basis(j, n, p).poly;
        const auto residual = op_H(e, rep) + (p.eta() + n) * e;
        CHECK(residual.max_abs_coeff() <= 1e-12 * std::max(1.0, e.max_abs_coeff()));
      }
  }
}

TEST_CASE("sigma examples") {
  // lambda_0 = 1 for m = 0, lambda = 1.
  const ModelParams p0(1.0, {1.0});
  CHECK(sigma_single(0, 1, p0).value == 2.0);
  CHECK(sigma_cumulative(0, 0, p0).value == 1.0);
  CHECK(sigma_cumulative(0, 2, p0).value == 12.0);
  const ModelParams p1(1.0, {1.0, 1.0});
  CHECK(sigma_single(0, 2, p1).value == 4.0);
  CHECK(sigma_cumulative(0, 3, p1).value == 36.0);
  CHECK_FALSE(sigma_single(0, 2, p1).non_positive);

  // 2 lambda_0 = 1 - k makes sigma_k vanish: lambda = 0, k = 1, m = 0.
  const ModelParams boundary(0.0, {1.0}, Degenerate::allow);
  const auto s = sigma_single(0, 1, boundary);
  CHECK(s.value == 0.0);
  CHECK(s.non_positive);
  CHECK(sigma_cumulative(0, 3, boundary).non_positive);
}

TEST_CASE("sigma_cumulative is the product of sigma_single") {
  for (int m = 0; m <= 3; ++m) {
    const auto p = params_for(m, 0.5 * m + 0.35);
    for (int j = 0; j <= m; ++j) {
      double product = 1.0;
      for (int n = 1; n <= 25; ++n) {
        product *= sigma_single(j, n, p).value;
        const double c = sigma_cumulative(j, n, p).value;
        CHECK(std::abs(c - product) <= 1e-12 * product);
      }
    }
  }
}

TEST_CASE("e_basis examples") {
  for (int m = 0; m <= 3; ++m) {
    const auto p = params_for(m, 0.5 * m + 0.7);
    for (int j = 0; j <= m; ++j) {
      CHECK(max_abs_difference(e_basis(j, j, p).poly,
                               VectorPolynomial::monomial(m, j, 0)) < 1e-15);
      for (int n = 0; n < j; ++n)
        CHECK(e_basis(j, n, p).poly.is_zero());
    }
  }
  const ModelParams p(1.0, {1.0, 1.0});
  CHECK(max_abs_difference(e_basis(0, 1, p).poly, poly2(1.0, 1, 1.0, 0)) <
        1e-15);
  CHECK(std::abs(e_basis(0, 2, p).poly.coeff(1, 1) - 2.0) < 1e-15);
}

TEST_CASE("e_basis rejects non-positive normalization") {
  // 2 lambda_0 = -0.5: (2 lambda_0)_1 < 0.
  const ModelParams p(0.25, {1.0, 1.0}, Degenerate::allow);
  CHECK_THROWS_AS(e_basis(0, 1, p), NormalizationFailure);
  CHECK_THROWS_AS(g_matrix(1, p), NormalizationFailure);
  CHECK_NOTHROW(e_basis(0, 0, p));
}

TEST_CASE("g_matrix examples") {
  const ModelParams p(1.0, {1.0, 1.0});
  RMatrix g1(2, 2), g2(2, 2);
  g1 << 1, 0, 1, 1;
  g2 << 1, 0, 2, std::sqrt(3.0);
  CHECK((g_matrix(1, p).entries - g1).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((g_matrix(2, p).entries - g2).cwiseAbs().maxCoeff() < 1e-15);
  const ModelParams p2(1.6, {1.0, 1.0, 1.0});
  RMatrix g0 = RMatrix::Zero(3, 3);
  g0(0, 0) = 1.0;
  CHECK((g_matrix(0, p2).entries - g0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("g_matrix columns are the e_basis coefficients") {
  for (int m = 0; m <= 4; ++m) {
    const auto p = params_for(m, 0.5 * m + 0.45);
    for (int n = 0; n <= 18; ++n) {
      const RMatrix G = g_matrix(n, p).entries;
      for (int j = 0; j <= m; ++j) {
        const auto e = e_basis(j, n, p).poly;
        for (int l = 0; l <= m; ++l) {
          const double expected = n >= l ? e.coeff(n - l, l).real() : 0.0;
          CHECK(std::abs(G(l, j) - expected) <=
                1e-12 * std::max(1.0, std::abs(expected)));
        }
      }
    }
  }
}

TEST_CASE("g_matrix structure") {
  for (int m = 0; m <= 4; ++m) {
    const auto p = params_for(m, 0.5 * m + 0.3);
    for (int n = 0; n <= 20; ++n) {
      const RMatrix G = g_matrix(n, p).entries;
      for (int l = 0; l <= m; ++l)
        for (int j = 0; j <= m; ++j)
          if (l < j || n < l)
            CHECK(G(l, j) == 0.0);
      if (n >= m)
        for (int j = 0; j <= m; ++j)
          CHECK(G(j, j) > 0.0);
    }
  }
}

TEST_CASE("g_matrix matches the written-out m = 1 and m = 2 forms") {
  for (double lambda : {0.75, 1.0, 2.0})
    for (int n = 0; n <= 20; ++n) {
      const ModelParams p(lambda, {1.0, 0.5});
      CHECK((g_matrix(n, p).entries - transcribed::g2(n, lambda))
                .cwiseAbs()
                .maxCoeff() <= 1e-12);
    }
  for (double lambda : {1.25, 1.6, 2.5})
    for (int n = 0; n <= 20; ++n) {
      const ModelParams p(lambda, {1.0, 0.5, 0.25});
      CHECK((g_matrix(n, p).entries - transcribed::g3(n, lambda))
                .cwiseAbs()
                .maxCoeff() <= 1e-12);
    }
}
