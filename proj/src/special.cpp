#include "sl2q/special.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sl2q {

namespace {

constexpr double kPi = std::numbers::pi;

// Minimal complex arithmetic in binary128 for the cancelling series.
struct qc {
  __float128 re, im;
};
inline qc operator+(qc a, qc b) { return {a.re + b.re, a.im + b.im}; }
inline qc operator*(qc a, qc b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline qc operator/(qc a, qc b) {
  __float128 d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline qc operator*(qc a, __float128 s) { return {a.re * s, a.im * s}; }
inline __float128 qabs(qc a) { return sqrtq(a.re * a.re + a.im * a.im); }
inline qc toq(cplx z) { return {z.real(), z.imag()}; }
inline cplx tod(qc z) { return {static_cast<double>(z.re), static_cast<double>(z.im)}; }

// Lanczos approximation, g = 7, n = 9.
const double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                            771.32342877765313,   -176.61502916214059,   12.507343278686905,
                            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z, double tol = 1e-13) {
  return std::abs(z.imag()) < tol && z.real() < 0.5 && std::abs(z.real() - std::round(z.real())) < tol;
}

struct Series {
  cplx sum;
  double max_term;
  int terms;
  bool converged;
};

// sum_k (a)_k (b)_k / ((c)_k k!) y^k
template <bool Quad>
Series gauss_series(cplx a, cplx b, cplx c, double y, int max_terms) {
  using T = std::conditional_t<Quad, qc, cplx>;
  auto conv = [](cplx z) {
    if constexpr (Quad) return toq(z); else return z;
  };
  auto mag = [](const T& z) -> double {
    if constexpr (Quad) return static_cast<double>(qabs(z)); else return std::abs(z);
  };
  T term = conv(1.0), sum = conv(1.0);
  T A = conv(a), B = conv(b), C = conv(c);
  double maxt = 1.0;
  int k = 0;
  bool ok = false;
  int small = 0;
  for (; k < max_terms; ++k) {
    T kk = conv(cplx(k, 0));
    T num = (A + kk) * (B + kk);
    T den = (C + kk) * conv(cplx(k + 1, 0));
    term = term * num / den;
    if constexpr (Quad) term = term * static_cast<__float128>(y); else term *= y;
    sum = sum + term;
    double mt = mag(term);
    maxt = std::max(maxt, mt);
    if (mt == 0.0) { ok = true; break; }
    double ms = mag(sum);
    small = mt <= 1e-22 * std::max(ms, 1e-300) ? small + 1 : 0;
    if (small >= 3) { ok = true; break; }
  }
  if constexpr (Quad) return {tod(sum), maxt, k + 1, ok};
  else return {sum, maxt, k + 1, ok};
}

// Exponent of the largest term, used to decide precision.
double log_max_term(cplx a, cplx b, cplx c, double y, int probe = 4000) {
  double lt = 0, best = 0;
  for (int k = 0; k < probe; ++k) {
    double r = std::log(std::abs((a + double(k)) * (b + double(k)))) - std::log(std::abs((c + double(k)) * double(k + 1))) + std::log(y);
    if (!std::isfinite(r)) return best;
    lt += r;
    best = std::max(best, lt);
    if (r < 0 && lt < best - 40) break;
  }
  return best;
}

double series_error(const Series& s, bool quad) {
  double eps = quad ? 1e-33 : 1.2e-16;
  return s.max_term * eps * 4 + (s.converged ? 0 : std::abs(s.sum));
}

}  // namespace

cplx lgamma_c(cplx z) {
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - lgamma_c(1.0 - z);
  }
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  cplx t = z + 7.5;
  return 0.5 * std::log(2 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx rgamma_c(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-lgamma_c(z));
}

Hyp2f1Result hyp2f1_ex(cplx a, cplx b, cplx c, double x, double one_minus_x) {
  if (!(x >= 0.0) || x >= 1.0) throw std::domain_error("hyp2f1: x must lie in [0, 1), got " + std::to_string(x));
  if (is_nonpositive_integer(c)) throw std::domain_error("hyp2f1: c is a nonpositive integer");
  double y = one_minus_x >= 0 ? one_minus_x : 1.0 - x;
  if (x == 0.0) return {1.0, 0.0, 0, false};

  const int kMaxTerms = 1000000;
  // terminating series: exact polynomial in x
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    int m = static_cast<int>(std::round(-(is_nonpositive_integer(a) ? a : b).real()));
    if (is_nonpositive_integer(a) && is_nonpositive_integer(b))
      m = std::min<int>(std::round(-a.real()), std::round(-b.real()));
    Series s = gauss_series<true>(a, b, c, x, m + 1);
    return {s.sum, series_error(s, true), s.terms, false};
  }

  cplx d = c - a - b;
  double dist_int = std::abs(d - std::round(d.real()));
  bool degenerate = dist_int < 0.05;

  auto direct = [&] {
    bool quad = log_max_term(a, b, c, x) >= std::log(1e4);
    Series s = quad ? gauss_series<true>(a, b, c, x, kMaxTerms) : gauss_series<false>(a, b, c, x, kMaxTerms);
    return Hyp2f1Result{s.sum, series_error(s, quad), s.terms, false};
  };
  auto connection = [&] {
    // F = A F(a, b; a+b-c+1; y) + B y^{c-a-b} F(c-a, c-b; c-a-b+1; y)
    cplx lgc = lgamma_c(c);
    cplx A = std::exp(lgc + lgamma_c(d)) * rgamma_c(c - a) * rgamma_c(c - b);
    cplx B = std::exp(lgc + lgamma_c(-d)) * rgamma_c(a) * rgamma_c(b);
    bool q1 = log_max_term(a, b, 1.0 - d, y) >= std::log(1e4);
    bool q2 = log_max_term(c - a, c - b, 1.0 + d, y) >= std::log(1e4);
    Series s1 = q1 ? gauss_series<true>(a, b, 1.0 - d, y, kMaxTerms) : gauss_series<false>(a, b, 1.0 - d, y, kMaxTerms);
    Series s2 = q2 ? gauss_series<true>(c - a, c - b, 1.0 + d, y, kMaxTerms)
                   : gauss_series<false>(c - a, c - b, 1.0 + d, y, kMaxTerms);
    cplx yd = std::exp(d * std::log(y));
    cplx t1 = A * s1.sum, t2 = B * yd * s2.sum;
    double err = std::abs(A) * series_error(s1, q1) + std::abs(B * yd) * series_error(s2, q2) +
                 4e-15 * (std::abs(t1) + std::abs(t2));
    return Hyp2f1Result{t1 + t2, err, s1.terms + s2.terms, true};
  };

  Hyp2f1Result r;
  if (degenerate) {
    r = direct();
  } else if (x <= 0.5) {
    r = direct();
    if (r.error_bound > 1e-11 * std::max(1.0, std::abs(r.value))) {
      Hyp2f1Result alt = connection();
      if (alt.error_bound < r.error_bound) r = alt;
    }
  } else {
    r = connection();
    if (r.error_bound > 1e-11 * std::max(1.0, std::abs(r.value))) {
      Hyp2f1Result alt = direct();
      if (alt.error_bound < r.error_bound) r = alt;
    }
  }
  return r;
}

cplx hyp2f1(cplx a, cplx b, cplx c, double x, double one_minus_x) {
  Hyp2f1Result r = hyp2f1_ex(a, b, c, x, one_minus_x);
  if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()))
    throw std::runtime_error("hyp2f1: non-finite result");
  return r.value;
}

}  // namespace sl2q
