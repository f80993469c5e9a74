#pragma once

#include <cstdint>

#include "cdhom/types.hpp"

namespace cdhom {

/// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
double pochhammer(double x, int n);

/// Product over i < n of (x+i)/(y+i). Equals (x)_n / (y)_n but stays finite
/// for large n where the two factorials overflow separately.
double pochhammer_ratio(double x, double y, int n);

/// Binomial coefficient, zero when k < 0 or n < k.
std::int64_t binom(int n, int k);

/// exp(exponent * Log(base)) with the principal logarithm.
/// Throws ZeroBase for base == 0.
cplx cpow_principal(cplx base, double exponent);

} // namespace cdhom
