#pragma once

#include "cdhom/types.hpp"

// Closed forms for m = 1 and m = 2 written out entry by entry, with mu_0 = 1.
// They share no code with the general-m construction and serve as golden
// references for it. Entries below the degree (row l > n) are zero, and
// shift-block columns j > n (absent basis vectors) are zero.
namespace cdhom::transcribed {

RMatrix g2(int n, double lambda);
RMatrix w2(int n, double lambda, double mu1);
CMatrix k2(cplx z, cplx w, double lambda, double mu1);

RMatrix g3(int n, double lambda);
RMatrix w3(int n, double lambda, double mu1, double mu2);
CMatrix k3(cplx z, cplx w, double lambda, double mu1, double mu2);

} // namespace cdhom::transcribed
