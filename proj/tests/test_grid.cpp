#include "doctest.h"

#include "sl2q/fourier_symbols.hpp"
#include "sl2q/grid.hpp"
#include "sl2q/moyal.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace sl2q;

namespace {
const double kPi = std::numbers::pi;
const cplx I(0, 1);

GridFunction gaussian(int N, double Lw, double c) {
  GridFunction g = make_grid(N, Lw);
  return sample(g.ax, g.ay, [c](double l, double lp) { return cplx(std::exp(-0.5 * l * l - 0.5 * (lp - c) * (lp - c))); });
}
}  // namespace

TEST_CASE("grid axes") {
  GridFunction g = make_grid(64, 8);
  CHECK(g.ax.at(0) == -8);
  CHECK(g.ax.dx == doctest::Approx(0.25));
  CHECK(g.ay.var == LP);
  Axis e = dual_eta_axis(64, 8);
  CHECK(e.var == ETA);
  CHECK(e.at(32) == doctest::Approx(0).epsilon(1e-15));
  CHECK(e.dx == doctest::Approx(kPi / 8));
  CHECK_THROWS_AS(make_grid(48, 8), std::invalid_argument);
}

TEST_CASE("partial Fourier of a Gaussian") {
  const double c = 0.7;
  GridFunction uh = partial_fourier_grid(gaussian(128, 10, c));
  double worst = 0;
  for (int i = 0; i < 128; ++i)
    for (int k = 0; k < 128; ++k) {
      double l = uh.ax.at(i), eta = uh.ay.at(k);
      cplx exact = std::exp(-0.5 * l * l) * std::sqrt(2 * kPi) * std::exp(-0.5 * eta * eta + I * eta * c);
      worst = std::max(worst, std::abs(uh(i, k) - exact));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("inverse partial Fourier round trip") {
  GridFunction u = gaussian(64, 9, -0.4);
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) u(i, j) *= 1.0 + 0.3 * I * u.ay.at(j);
  for (int kappa : {-1, 1}) {
    GridFunction back = inverse_partial_fourier_grid(partial_fourier_grid(u, kappa), kappa);
    CHECK(back.ay.var == LP);
    CHECK(back.ay.x0 == doctest::Approx(u.ay.x0));
    CHECK(relative_l2(back, u) < 1e-10);
  }
}

TEST_CASE("Fourier dictionary on the grid") {
  GridFunction u = gaussian(128, 10, 0.3);
  GridFunction uh = partial_fourier_grid(u);
  // l' u  ->  -i d_eta uh ;  d_l' u  ->  -i eta uh
  GridFunction lpu = u, dlpu = spectral_derivative(u, 1);
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 128; ++j) lpu(i, j) *= u.ay.at(j);
  GridFunction a = partial_fourier_grid(lpu), b = partial_fourier_grid(dlpu);
  GridFunction da = spectral_derivative(uh, 1), eb = uh;
  for (int i = 0; i < 128; ++i)
    for (int k = 0; k < 128; ++k) {
      da(i, k) *= -I;
      eb(i, k) *= -I * uh.ay.at(k);
    }
  CHECK(relative_l2(a, da) < 1e-6);
  CHECK(relative_l2(b, eb) < 1e-6);
}

TEST_CASE("decay warning and argument checks") {
  GridFunction g = make_grid(32, 2);
  GridFunction wide = sample(g.ax, g.ay, [](double, double) { return cplx(1); });
  std::vector<std::string> w;
  partial_fourier_grid(wide, -1, &w);
  CHECK(w.size() == 1);
  w.clear();
  partial_fourier_grid(gaussian(64, 10, 0), -1, &w);
  CHECK(w.empty());
  CHECK_THROWS_AS(inverse_partial_fourier_grid(g), std::invalid_argument);
  GridFunction swapped = make_grid(32, 4, LP, L);
  CHECK_THROWS_AS(partial_fourier_grid(swapped), std::invalid_argument);
}

TEST_CASE("Gaussian-type exact action") {
  Polynomial l = Polynomial::var(L), lp = Polynomial::var(LP);
  GaussianType u{Polynomial(1) + l * lp, -(l * l) - GQ(2) * lp * lp};
  // d_l (P e^g) = (d_l P + P d_l g) e^g
  GaussianType du = u.apply(DiffOp::d(L));
  CHECK(du.P == lp + (Polynomial(1) + l * lp) * (l * GQ(-2)));
  double x = 0.3, y = -0.2, h = 1e-6;
  cplx fd = (u.eval(x + h, y, L, LP, 0.5) - u.eval(x - h, y, L, LP, 0.5)) / (2 * h);
  CHECK(std::abs(fd - du.eval(x, y, L, LP, 0.5)) < 1e-8);
}

TEST_CASE("transported ad matches rho_hat on the grid") {
  Polynomial l = Polynomial::var(L), lp = Polynomial::var(LP);
  GaussianType u{Polynomial(1) + l * lp * lp, -(l * l) - lp * lp};
  GridFunction g0 = make_grid(128, 8);
  const double nu = 0.25;
  for (const auto& X : {LieElement::E(), LieElement::H(), LieElement::F()}) {
    GridFunction uh = partial_fourier_grid(u.sample(g0.ax, g0.ay, nu));
    GridFunction vh = partial_fourier_grid(u.apply(ad_star_as_diffop(X)).sample(g0.ax, g0.ay, nu));
    CHECK(relative_l2(apply_diffop_grid(rho_hat(X), uh, nu), vh) < 1e-9);
  }
}

TEST_CASE("property: partial Fourier is linear and preserves the l2 norm up to 2pi") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> nd;
  GridFunction g0 = make_grid(64, 10);
  for (int trial = 0; trial < 10; ++trial) {
    double c1 = nd(rng), c2 = nd(rng), s = 0.5 + std::abs(nd(rng));
    cplx a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
    GridFunction u = sample(g0.ax, g0.ay, [&](double l, double lp) { return cplx(std::exp(-l * l - s * (lp - c1) * (lp - c1))); });
    GridFunction v = sample(g0.ax, g0.ay, [&](double l, double lp) { return cplx(std::exp(-l * l - (lp - c2) * (lp - c2)) * lp); });
    GridFunction w = u;
    for (size_t k = 0; k < w.v.size(); ++k) w.v[k] = a * u.v[k] + b * v.v[k];
    GridFunction uh = partial_fourier_grid(u), vh = partial_fourier_grid(v), wh = partial_fourier_grid(w);
    GridFunction comb = uh;
    for (size_t k = 0; k < comb.v.size(); ++k) comb.v[k] = a * uh.v[k] + b * vh.v[k];
    CHECK(relative_l2(wh, comb) < 1e-13);
    // discrete Parseval: sum |uh|^2 d_eta = 2 pi sum |u|^2 d_l'
    CHECK(l2_norm(uh) * l2_norm(uh) == doctest::Approx(2 * kPi * l2_norm(u) * l2_norm(u)).epsilon(1e-12));
  }
}
