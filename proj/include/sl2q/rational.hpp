#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace sl2q {

// Gaussian rational a + b i with a, b in Q.
struct GQ {
  mpq_class re;
  mpq_class im;

  GQ() : re(0), im(0) {}
  GQ(long r) : re(r), im(0) {}
  GQ(const mpq_class& r) : re(r), im(0) {}
  GQ(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

  static GQ frac(long p, long q) { mpq_class r(p, q); r.canonicalize(); return GQ(r); }
  static GQ I() { return GQ(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GQ conj() const { return GQ(re, -im); }

  GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
  GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
  GQ& operator*=(const GQ& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = r; im = i;
    return *this;
  }
  GQ& operator/=(const GQ& o);

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

inline GQ operator+(GQ a, const GQ& b) { return a += b; }
inline GQ operator-(GQ a, const GQ& b) { return a -= b; }
inline GQ operator*(GQ a, const GQ& b) { return a *= b; }
inline GQ operator/(GQ a, const GQ& b) { return a /= b; }
inline GQ operator-(const GQ& a) { return GQ(-a.re, -a.im); }
inline bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

// Parses "p", "p/q", "-p/q".
GQ parse_rational(const std::string& s);

}  // namespace sl2q
