#include "sl2q/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sl2q {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place 1-D transforms of all lines along one axis.
void fft_lines(GridFunction& g, int axis, int sign) {
  int n = axis == 0 ? g.ax.n : g.ay.n;
  int howmany = axis == 0 ? g.ay.n : g.ax.n;
  int stride = axis == 0 ? g.ay.n : 1;
  int dist = axis == 0 ? 1 : g.ay.n;
  auto* p = reinterpret_cast<fftw_complex*>(g.v.data());
  fftw_plan plan = fftw_plan_many_dft(1, &n, howmany, p, nullptr, stride, dist, p, nullptr, stride, dist, sign,
                                      FFTW_ESTIMATE);
  if (!plan) throw std::runtime_error("fftw plan failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

double coord(const Axis& a, int i) { return a.at(i); }

}  // namespace

GridFunction make_grid(int N, double half_width, Var xvar, Var yvar) {
  const double L = half_width;
  if (!power_of_two(N)) throw std::invalid_argument("make_grid: N must be a power of two");
  double h = 2 * L / N;
  return GridFunction(Axis{N, -L, h, xvar}, Axis{N, -L, h, yvar});
}

double l2_norm(const GridFunction& g) {
  double s = 0;
  for (const auto& x : g.v) s += std::norm(x);
  return std::sqrt(s * g.ax.dx * g.ay.dx);
}

double relative_l2(const GridFunction& a, const GridFunction& b) {
  if (a.v.size() != b.v.size()) throw std::invalid_argument("relative_l2: shape mismatch");
  double num = 0, den = 0;
  for (size_t k = 0; k < a.v.size(); ++k) {
    num += std::norm(a.v[k] - b.v[k]);
    den += std::norm(a.v[k]);
  }
  return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

double boundary_max(const GridFunction& g) {
  double m = 0;
  for (int i = 0; i < g.ax.n; ++i) m = std::max({m, std::abs(g(i, 0)), std::abs(g(i, g.ay.n - 1))});
  for (int j = 0; j < g.ay.n; ++j) m = std::max({m, std::abs(g(0, j)), std::abs(g(g.ax.n - 1, j))});
  return m;
}

GridFunction partial_fourier_grid(const GridFunction& u, int kappa, std::vector<std::string>* warnings,
                                  double decay_tol) {
  const int N = u.ay.n;
  if (!power_of_two(N)) throw std::invalid_argument("partial_fourier_grid: N must be a power of two");
  if (u.ay.var != LP) throw std::invalid_argument("partial_fourier_grid: second axis must be l'");
  double bm = boundary_max(u);
  if (warnings && bm > decay_tol)
    warnings->push_back("partial_fourier_grid: boundary value " + std::to_string(bm) + " exceeds decay tolerance");

  const double h = u.ay.dx, L0 = u.ay.x0;
  const double deta = 2 * std::numbers::pi / (N * h);
  GridFunction r(u.ax, Axis{N, -(N / 2) * deta, deta, ETA});
  for (int i = 0; i < u.ax.n; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = (j % 2 ? -1.0 : 1.0) * u(i, j);
  // kernel exp(-i kappa eta l'): FFTW sign -kappa
  fft_lines(r, 1, kappa > 0 ? FFTW_FORWARD : FFTW_BACKWARD);
  for (int k = 0; k < N; ++k) {
    double eta = r.ay.at(k);
    cplx ph = h * std::exp(cplx(0, -kappa * eta * L0));
    for (int i = 0; i < u.ax.n; ++i) r(i, k) *= ph;
  }
  return r;
}

Axis dual_eta_axis(int N, double half_width) {
  double deta = std::numbers::pi / half_width;
  return Axis{N, -(N / 2) * deta, deta, ETA};
}

GridFunction inverse_partial_fourier_grid(const GridFunction& uh, int kappa) {
  const int N = uh.ay.n;
  if (!power_of_two(N)) throw std::invalid_argument("inverse_partial_fourier_grid: N must be a power of two");
  if (uh.ay.var != ETA) throw std::invalid_argument("inverse_partial_fourier_grid: second axis must be eta");
  const double deta = uh.ay.dx, eta0 = uh.ay.x0;
  if (std::abs(eta0 + (N / 2) * deta) > 1e-9 * deta) throw std::invalid_argument("inverse_partial_fourier_grid: eta grid not centred");
  const double L = std::numbers::pi / deta, h = 2 * L / N;
  GridFunction r(uh.ax, Axis{N, -L, h, LP});
  // u(l'_j) = (deta / 2 pi) sum_k exp(i kappa eta_k l'_j) uh_k
  for (int i = 0; i < uh.ax.n; ++i)
    for (int k = 0; k < N; ++k) r(i, k) = uh(i, k) * std::exp(cplx(0, kappa * uh.ay.at(k) * (-L)));
  fft_lines(r, 1, kappa > 0 ? FFTW_BACKWARD : FFTW_FORWARD);
  for (int j = 0; j < N; ++j) {
    double lp = r.ay.at(j);
    cplx ph = deta / (2 * std::numbers::pi) * std::exp(cplx(0, kappa * eta0 * (lp + L)));
    for (int i = 0; i < uh.ax.n; ++i) r(i, j) *= ph;
  }
  return r;
}

GridFunction spectral_derivative(const GridFunction& g, int axis, int order) {
  if (order == 0) return g;
  const Axis& a = axis == 0 ? g.ax : g.ay;
  const int n = a.n;
  const double period = n * a.dx;
  GridFunction r = g;
  fft_lines(r, axis, FFTW_FORWARD);
  for (int k = 0; k < n; ++k) {
    int kk = k <= n / 2 ? k : k - n;
    cplx fac = std::pow(cplx(0, 2 * std::numbers::pi * kk / period), order) / static_cast<double>(n);
    if (k == n / 2 && order % 2 == 1) fac = 0;
    if (axis == 0)
      for (int j = 0; j < g.ay.n; ++j) r(k, j) *= fac;
    else
      for (int i = 0; i < g.ax.n; ++i) r(i, k) *= fac;
  }
  fft_lines(r, axis, FFTW_BACKWARD);
  return r;
}

GridFunction apply_diffop_grid(const DiffOp& D, const GridFunction& g, double nu) {
  const int sx = var_slot(g.ax.var), sy = var_slot(g.ay.var);
  GridFunction out(g.ax, g.ay);
  for (const auto& [a, c] : D.terms()) {
    for (int s = 0; s < 3; ++s)
      if (a[s] != 0 && s != sx && s != sy) throw std::invalid_argument("apply_diffop_grid: derivative off the grid axes");
    GridFunction d = spectral_derivative(spectral_derivative(g, 0, a[sx]), 1, a[sy]);
    for (int i = 0; i < g.ax.n; ++i)
      for (int j = 0; j < g.ay.n; ++j) {
        double v[4] = {0, 0, 0, nu};
        v[sx] = coord(g.ax, i);
        v[sy] = coord(g.ay, j);
        out(i, j) += c.eval(v[0], v[1], v[2], v[3]) * d(i, j);
      }
  }
  return out;
}

GaussianType GaussianType::apply(const DiffOp& D) const {
  Polynomial acc;
  for (const auto& [a, c] : D.terms()) {
    Polynomial q = P;
    for (int s = 0; s < 3; ++s) {
      Var v = static_cast<Var>(s);
      Polynomial dg = g.diff(v);
      for (int k = 0; k < a[s]; ++k) q = q.diff(v) + q * dg;
    }
    acc += c * q;
  }
  return {acc, g};
}

cplx GaussianType::eval(double x, double y, Var xvar, Var yvar, double nu) const {
  double v[4] = {0, 0, 0, nu};
  v[xvar] = x;
  v[yvar] = y;
  cplx e = g.eval(v[0], v[1], v[2], v[3]);
  return P.eval(v[0], v[1], v[2], v[3]) * std::exp(e);
}

GridFunction GaussianType::sample(const Axis& x, const Axis& y, double nu) const {
  return sl2q::sample(x, y, [&](double a, double b) { return eval(a, b, x.var, y.var, nu); });
}

}  // namespace sl2q
