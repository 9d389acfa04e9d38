#pragma once

#include "sl2q/diffop.hpp"

#include <complex>
#include <string>
#include <vector>

namespace sl2q {

using cplx = std::complex<double>;

struct Axis {
  int n = 0;
  double x0 = 0, dx = 0;
  Var var = L;
  double at(int i) const { return x0 + i * dx; }
};

// Samples on a uniform rectangular grid; value (i, j) at (ax.at(i), ay.at(j)).
struct GridFunction {
  Axis ax, ay;
  std::vector<cplx> v;

  GridFunction() = default;
  GridFunction(const Axis& x, const Axis& y) : ax(x), ay(y), v(static_cast<size_t>(x.n) * y.n) {}
  cplx& operator()(int i, int j) { return v[static_cast<size_t>(i) * ay.n + j]; }
  const cplx& operator()(int i, int j) const { return v[static_cast<size_t>(i) * ay.n + j]; }
};

// [-L, L)^2 with N points per side; N must be a power of two.
GridFunction make_grid(int N, double half_width, Var xvar = Var::L, Var yvar = Var::LP);

template <class Fn>
GridFunction sample(const Axis& x, const Axis& y, Fn&& fn) {
  GridFunction g(x, y);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < y.n; ++j) g(i, j) = fn(x.at(i), y.at(j));
  return g;
}

double l2_norm(const GridFunction& g);
double relative_l2(const GridFunction& a, const GridFunction& b);
double boundary_max(const GridFunction& g);

// int exp(-i kappa eta l') u(l, l') dl' along the second axis, continuum-scaled.
// eta_k = (k - N/2) * pi / L. Boundary values above `decay_tol` append a warning.
GridFunction partial_fourier_grid(const GridFunction& u, int kappa = -1, std::vector<std::string>* warnings = nullptr,
                                  double decay_tol = 1e-12);
// The l' half-width is pi / d_eta, the dual of the eta spacing.
GridFunction inverse_partial_fourier_grid(const GridFunction& uh, int kappa = -1);
// eta axis dual to an l' grid of N points on [-L, L).
Axis dual_eta_axis(int N, double half_width);

// Periodic spectral derivative of the given order along axis 0 or 1.
GridFunction spectral_derivative(const GridFunction& g, int axis, int order = 1);

// Applies an operator whose coefficients are evaluated at numeric nu; derivatives spectral.
GridFunction apply_diffop_grid(const DiffOp& D, const GridFunction& g, double nu);

// u = P exp(g) with polynomial P and polynomial exponent g (real coefficients in g).
struct GaussianType {
  Polynomial P, g;

  GaussianType apply(const DiffOp& D) const;
  cplx eval(double x, double y, Var xvar, Var yvar, double nu) const;
  GridFunction sample(const Axis& x, const Axis& y, double nu) const;
};

}  // namespace sl2q
