#include "cdhom/transcribed.hpp"

#include <cmath>

namespace cdhom::transcribed {

namespace {

double poch(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i)
    r *= x + i;
  return r;
}

cplx powr(cplx base, double e) { return std::exp(e * std::log(base)); }

} // namespace

RMatrix g2(int n, double lambda) {
  const double L2 = 2.0 * lambda;
  RMatrix G = RMatrix::Zero(2, 2);
  G(0, 0) = std::sqrt(poch(L2 - 1, n) / poch(1, n));
  if (n >= 1) {
    G(1, 0) = std::sqrt(n / (L2 - 1)) *
              std::sqrt(poch(L2, n - 1) / poch(1, n - 1));
    G(1, 1) = std::sqrt(poch(L2 + 1, n - 1) / poch(1, n - 1));
  }
  return G;
}

RMatrix w2(int n, double lambda, double mu1) {
  const double L2 = 2.0 * lambda;
  RMatrix W = RMatrix::Zero(2, 2);
  W(0, 0) = std::sqrt((n + 1) / (L2 + n - 1));
  W(1, 0) = -(1.0 / mu1) * std::sqrt(L2 / (L2 - 1)) *
            std::sqrt(1.0 / ((L2 + n - 1) * (L2 + n)));
  if (n >= 1)
    W(1, 1) = std::sqrt(n / (L2 + n));
  return W;
}

CMatrix k2(cplx z, cplx w, double lambda, double mu1) {
  const double L2 = 2.0 * lambda;
  const cplx wb = std::conj(w);
  const cplx x = wb * z;
  const cplx o = 1.0 - x;
  CMatrix K(2, 2);
  K(0, 0) = 1.0 / powr(o, L2 - 1);
  K(0, 1) = z / powr(o, L2);
  K(1, 0) = wb / powr(o, L2);
  K(1, 1) = 1.0 / (L2 - 1) * (1.0 + (L2 - 1) * x) / powr(o, L2 + 1);
  K(1, 1) += mu1 * mu1 / powr(o, L2 + 1);
  return K;
}

RMatrix g3(int n, double lambda) {
  const double L2 = 2.0 * lambda;
  RMatrix G = RMatrix::Zero(3, 3);
  G(0, 0) = std::sqrt(poch(L2 - 2, n) / poch(1, n));
  if (n >= 1) {
    G(1, 0) = std::sqrt(n / (L2 - 2)) *
              std::sqrt(poch(L2 - 1, n - 1) / poch(1, n - 1));
    G(1, 1) = std::sqrt(poch(L2, n - 1) / poch(1, n - 1));
  }
  if (n >= 2) {
    G(2, 0) = std::sqrt(n * (n - 1.0) / ((L2 - 2) * (L2 - 1))) *
              std::sqrt(poch(L2, n - 2) / poch(1, n - 2));
    G(2, 1) = 2.0 * std::sqrt((n - 1.0) / L2) *
              std::sqrt(poch(L2 + 1, n - 2) / poch(1, n - 2));
    G(2, 2) = std::sqrt(poch(L2 + 2, n - 2) / poch(1, n - 2));
  }
  return G;
}

RMatrix w3(int n, double lambda, double mu1, double mu2) {
  const double L2 = 2.0 * lambda;
  RMatrix W = RMatrix::Zero(3, 3);
  W(0, 0) = std::sqrt((n + 1) / (L2 + n - 2));
  W(1, 0) = -1.0 / mu1 * std::sqrt((L2 - 1) / (L2 - 2)) *
            std::sqrt(1.0 / ((L2 + n - 1) * (L2 + n - 2)));
  W(2, 0) = -2.0 / mu2 * std::sqrt((L2 + 1) / poch(L2 - 2, 3)) *
            std::sqrt(n / poch(L2 + n - 2, 3));
  if (n >= 1) {
    W(1, 1) = std::sqrt(n / (L2 + n - 1));
    W(2, 1) = -2.0 * mu1 / mu2 * std::sqrt((L2 + 1) / L2) *
              std::sqrt(1.0 / ((L2 + n - 1) * (L2 + n)));
  }
  if (n >= 2)
    W(2, 2) = std::sqrt((n - 1.0) / (L2 + n));
  return W;
}

CMatrix k3(cplx z, cplx w, double lambda, double mu1, double mu2) {
  const double L2 = 2.0 * lambda;
  const cplx wb = std::conj(w);
  const cplx x = wb * z;
  const cplx o = 1.0 - x;
  CMatrix A(3, 3);
  A(0, 0) = 1.0 / powr(o, L2 - 2);
  A(0, 1) = z / powr(o, L2 - 1);
  A(0, 2) = z * z / powr(o, L2);
  A(1, 0) = wb / powr(o, L2 - 1);
  A(1, 1) = (1.0 + (L2 - 2) * x) / ((L2 - 2) * powr(o, L2));
  A(1, 2) = z * (2.0 + (L2 - 2) * x) / ((L2 - 2) * powr(o, L2 + 1));
  A(2, 0) = wb * wb / powr(o, L2);
  A(2, 1) = wb * (2.0 + (L2 - 2) * x) / ((L2 - 2) * powr(o, L2 + 1));
  A(2, 2) = (2.0 + 4.0 * (L2 - 1) * x + (L2 - 1) * (L2 - 2) * z * z * wb * wb) /
            ((L2 - 1) * (L2 - 2) * powr(o, L2 + 2));

  CMatrix B = CMatrix::Zero(3, 3);
  B(1, 1) = 1.0 / powr(o, L2);
  B(1, 2) = 2.0 * z / powr(o, L2 + 1);
  B(2, 1) = 2.0 * wb / powr(o, L2 + 1);
  B(2, 2) = 2.0 * (2.0 / L2) * (1.0 + L2 * x) / powr(o, L2 + 2);

  CMatrix C = CMatrix::Zero(3, 3);
  C(2, 2) = 1.0 / powr(o, L2 + 2);

  return A + mu1 * mu1 * B + mu2 * mu2 * C;
}

} // namespace cdhom::transcribed
