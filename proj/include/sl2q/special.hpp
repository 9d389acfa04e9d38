#pragma once

#include <complex>

namespace sl2q {

using cplx = std::complex<double>;

// log Gamma(z) up to an additive multiple of 2 pi i (enough for exp(lgamma)).
cplx lgamma_c(cplx z);
// 1 / Gamma(z), exactly zero at the poles.
cplx rgamma_c(cplx z);

struct Hyp2f1Result {
  cplx value;
  double error_bound;  // estimated absolute error
  int terms;
  bool connection;     // true if the 1 - x transformation was used
};

// Gauss 2F1(a, b; c; x) for real 0 <= x < 1. one_minus_x may be passed separately
// to keep precision near x = 1 (negative means compute 1 - x).
Hyp2f1Result hyp2f1_ex(cplx a, cplx b, cplx c, double x, double one_minus_x = -1);
cplx hyp2f1(cplx a, cplx b, cplx c, double x, double one_minus_x = -1);

}  // namespace sl2q
