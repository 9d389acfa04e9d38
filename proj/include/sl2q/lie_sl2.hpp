#pragma once

#include "sl2q/polynomial.hpp"

#include <array>
#include <string>

namespace sl2q {

// X = e E + h H + f F with E=(0 1;0 0), F=(0 0;1 0), H=(1 0;0 -1).
// T is GQ for numbers and Polynomial for elements depending on coordinates.
template <class T>
struct LieElem {
  T e{}, h{}, f{};

  static LieElem E() { return {T(1), T(0), T(0)}; }
  static LieElem H() { return {T(0), T(1), T(0)}; }
  static LieElem F() { return {T(0), T(0), T(1)}; }

  LieElem& operator+=(const LieElem& o) { e += o.e; h += o.h; f += o.f; return *this; }
  LieElem& operator-=(const LieElem& o) { e -= o.e; h -= o.h; f -= o.f; return *this; }
  friend LieElem operator+(LieElem a, const LieElem& b) { return a += b; }
  friend LieElem operator-(LieElem a, const LieElem& b) { return a -= b; }
  friend LieElem operator*(const T& c, const LieElem& a) { return {c * a.e, c * a.h, c * a.f}; }
  friend bool operator==(const LieElem& a, const LieElem& b) { return a.e == b.e && a.h == b.h && a.f == b.f; }

  std::array<T, 3> coords() const { return {e, h, f}; }
};

using LieElement = LieElem<GQ>;
using LiePoly = LieElem<Polynomial>;

template <class T>
LieElem<T> bracket(const LieElem<T>& X, const LieElem<T>& Y) {
  // [E,H] = -2E, [F,H] = 2F, [E,F] = H
  LieElem<T> r;
  r.e = T(2) * (X.h * Y.e - X.e * Y.h);
  r.h = X.e * Y.f - X.f * Y.e;
  r.f = T(2) * (X.f * Y.h - X.h * Y.f);
  return r;
}

// Matrix of ad X on the ordered basis (E, H, F); column j = ad X (basis_j).
template <class T>
std::array<std::array<T, 3>, 3> ad_matrix(const LieElem<T>& X) {
  std::array<std::array<T, 3>, 3> m;
  const LieElem<T> basis[3] = {LieElem<T>::E(), LieElem<T>::H(), LieElem<T>::F()};
  for (int j = 0; j < 3; ++j) {
    auto c = bracket(X, basis[j]).coords();
    for (int i = 0; i < 3; ++i) m[i][j] = c[i];
  }
  return m;
}

// Killing form: trace of ad X o ad Y on the adjoint representation.
template <class T>
T killing(const LieElem<T>& X, const LieElem<T>& Y) {
  auto a = ad_matrix(X), b = ad_matrix(Y);
  T tr(0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) tr += a[i][k] * b[k][i];
  return tr;
}

LiePoly to_poly(const LieElement& X);
LieElement to_number(const LiePoly& X);  // throws unless all coefficients constant

std::string str(const LieElement& X);

// Base point, pairing and orientation of the Darboux chart.
struct SymplecticFrame {
  LieElement o;
  GQ omega_EF;
  int sigma;

  // Omega(X, Y) = beta(o, [X, Y]).
  GQ omega(const LieElement& X, const LieElement& Y) const { return killing(o, bracket(X, Y)); }
  template <class T>
  T omega_poly(const LieElem<T>& X, const LieElem<T>& Y) const;
};

// o = H/8, Omega(E,F) = 1. sigma = -1 is the orientation fixed by the
// symbol calibration on A = E (see fourier_symbols).
const SymplecticFrame& default_frame();

// Ad(exp(l E)) Ad(exp(l' F)) o, exact; l and l' are Polynomial arguments.
LiePoly chart_phi(const Polynomial& l, const Polynomial& lp, const SymplecticFrame& fr = default_frame());
LiePoly chart_phi(const SymplecticFrame& fr = default_frame());

// lambda_A(l, l') = beta(chart_phi(l,l'), A).
Polynomial moment_map(const LieElement& A, const SymplecticFrame& fr = default_frame());

// spur(h) = Omega([h, E], F); h must lie in span(H).
GQ spur(const LieElement& h, const SymplecticFrame& fr = default_frame());
Polynomial spur(const LiePoly& h, const SymplecticFrame& fr = default_frame());

struct Decomposition {
  LieElement h_part, l_part, lp_part;  // span(H), span(E), span(F)
};
Decomposition decompose(const LieElement& A);

// {u, v} = sigma (d_l u d_l' v - d_l' u d_l v)
Polynomial poisson(const Polynomial& u, const Polynomial& v, int sigma);

}  // namespace sl2q
