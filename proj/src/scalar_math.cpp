#include "cdhom/scalar_math.hpp"

#include <algorithm>
#include <cmath>

#include "cdhom/errors.hpp"

namespace cdhom {

double pochhammer(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i)
    r *= x + i;
  return r;
}

double pochhammer_ratio(double x, double y, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i)
    r *= (x + i) / (y + i);
  return r;
}

std::int64_t binom(int n, int k) {
  if (k < 0 || n < k)
    return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

cplx cpow_principal(cplx base, double exponent) {
  if (base == cplx{0.0, 0.0})
    throw ZeroBase("cpow_principal: zero base");
  if (exponent == 0.0)
    return 1.0;
  return std::exp(exponent * std::log(base));
}

} // namespace cdhom
