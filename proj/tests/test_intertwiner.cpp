#include "doctest.h"

#include "sl2q/intertwiner.hpp"

#include <cmath>
#include <random>

using namespace sl2q;

namespace {
const cplx I(0, 1);
SpectralGrid small_sg() { return SpectralGrid::make(10, 10, 12); }
}  // namespace

TEST_CASE("spectral and boundary grids") {
  SpectralGrid sg = SpectralGrid::make(4, 4, 8);
  CHECK(sg.size() == 32);
  // int_0^4 (1/2pi) tau tanh(pi tau) dtau = (8 - 1/24) / 2pi up to e^{-8 pi}
  double sum = 0;
  for (double w : sg.w) sum += w;
  CHECK(sum == doctest::Approx((8.0 - 1.0 / 24) / (2 * M_PI)).epsilon(1e-9));
  BoundaryGrid bg = BoundaryGrid::make(16);
  CHECK(std::abs(bg.b[4] - I) < 1e-15);
  DiscQuadrature q = DiscQuadrature::make(2.0, 16, 32);
  double area = 0;
  for (double w : q.w) area += w;
  CHECK(area == doctest::Approx(2 * M_PI * (std::cosh(2.0) - 1)).epsilon(1e-12));
}

TEST_CASE("multipliers") {
  SpectralGrid sg = small_sg();
  CHECK(Multiplier::constant(2).sup(sg) == 2);
  CHECK(Multiplier::lorentzian().sup(sg) <= 1);
  CHECK(Multiplier::linear().inf_abs(sg) > 0);
  CHECK(Multiplier::linear().sup(sg) > 9);
}

TEST_CASE("delta transform of radial input agrees with the spherical transform") {
  SpectralGrid sg = small_sg();
  BoundaryGrid bg = BoundaryGrid::make(16);
  RadialFunction f = bump_profile(0, 1.5, 0.2);
  Spectrum a = radial_spectrum(f, sg, bg);
  Spectrum b = fourier_delta(bi_equivariant_section(f), DiscQuadrature::make(f.t_max, 48, 64), sg, bg);
  double worst = 0;
  for (size_t i = 0; i < a.v.size(); ++i) worst = std::max(worst, std::abs(a.v[i] - b.v[i]));
  CHECK(worst / std::abs(a.v[0]) < 1e-8);
  std::vector<cplx> zeros(DiscQuadrature::make(1, 4, 4).size());
  Spectrum z = fourier_delta(zeros, 1, DiscQuadrature::make(1, 4, 4), sg, bg);
  for (cplx v : z.v) CHECK(v == 0.0);
  CHECK_THROWS_AS(radial_spectrum(bump_profile(0, 1, 0, 1), sg, bg), std::invalid_argument);
  // the type-0 component is the full spectrum for radial input
  auto c0 = k_type_component(a, 0, bg);
  auto c1 = k_type_component(a, 1, bg);
  CHECK(std::abs(c0[3] - a.at(0, 3)) < 1e-14);
  CHECK(std::abs(c1[3]) < 1e-14);
}

TEST_CASE("T f is a section of the right type") {
  SpectralGrid sg = small_sg();
  BoundaryGrid bg = BoundaryGrid::make(32);
  RadialFunction f = bump_profile(0, 1.5);
  auto xs = sample_points(10, 2.0, 3);
  for (int n : {0, 1, -2}) {
    Intertwiner T(Multiplier::lorentzian(), n, sg, bg);
    DeltaSection tf = build_T(T, f);
    CHECK(tf.n == n);
    CHECK(k_equivariance_residual(tf, xs, {0.4, 2.0}) < 1e-10);
  }
  Intertwiner T0(Multiplier::constant(), 0, sg, bg);
  std::function<cplx(cplx)> fz = [&](cplx z) { return cplx(f(hyperbolic_distance(z, 0.0))); };
  CHECK(check_equivariance(T0, GroupElement::identity(), fz, f.t_max, 12, 24, xs).residual == 0);
  CHECK_THROWS_AS(check_equivariance(T0, GroupElement::exp(0.2, 0.1, 0.0), f, 12, 24, xs), std::invalid_argument);
  std::vector<std::string> warn;
  Intertwiner Tz({"zero", [](double) { return 0.0; }}, 0, sg, bg);
  build_T(Tz, f, &warn);
  CHECK(warn.size() == 1);
  RadialFunction zero{[](double) { return 0.0; }, 1.0, 0, "zero"};
  CHECK(build_T(T0, zero)(a_t(0.5)) == 0.0);
}

TEST_CASE("partial isometry and norm bound") {
  RadialFunction f = bump_profile(0, 1.5);
  SpectralGrid sg = SpectralGrid::make(30, 30, 16);
  BoundaryGrid bg = BoundaryGrid::make(16);
  auto r = partial_isometry(bi_equivariant_section(f), 0, f.t_max, 48, 64, sg, bg);
  CHECK(std::abs(r.ratio - 1) < 1e-3);
  // ||Tf|| <= ||M||_inf ||f|| for M = 1/(1+tau^2): compare spectral sides
  Spectrum v = radial_spectrum(f, sg, bg);
  double lhs = 0, rhs = 0;
  for (size_t k = 0; k < sg.size(); ++k) {
    double m = Multiplier::lorentzian()(sg.tau[k]);
    lhs += sg.w[k] * m * m * std::norm(v.at(0, k));
    rhs += sg.w[k] * std::norm(v.at(0, k));
  }
  CHECK(lhs <= rhs);
}

TEST_CASE("Moyal chain guards and geometry") {
  SpectralGrid sg = small_sg();
  BoundaryGrid bg = BoundaryGrid::make(16);
  CHECK_THROWS_AS(MoyalChain(3, Multiplier::constant(), sg, bg), std::domain_error);
  CHECK_THROWS_AS(MoyalChain(0, Multiplier::constant(), sg, bg), std::domain_error);
  CHECK_THROWS_AS(compose_to_moyal(bump_profile(0, 1), 5, 16, 4, 2, sg, bg), std::domain_error);
  CHECK(std::abs(central_character(3) + 1.0) < 1e-12);
  CHECK(std::abs(central_character(2) - 1.0) < 1e-12);
  CHECK(std::abs(central_character(-4) - 1.0) < 1e-12);

  MoyalChain ch(2, Multiplier::constant(), sg, bg);
  CHECK(ch.T().n() == -1);
  bool on = false;
  GroupElement x = ch.section_at(0.0, 2.0, &on);  // z = l + i nu eta = i
  CHECK(on);
  CHECK(x.in_su11(1e-12));
  CHECK(std::abs(x.mobius(0.0)) < 1e-12);
  CHECK(ch.distance(0.0, 2.0) < 1e-7);
  CHECK(ch.distance(0.0, -2.0) == std::numeric_limits<double>::infinity());
  MoyalChain o2(2, Multiplier::constant(), sg, bg, Orbit::O2);
  CHECK(o2.T().n() == 1);
  CHECK(std::isfinite(o2.distance(0.0, -2.0)));

  RadialFunction zero{[](double) { return 0.0; }, 1.0, 0, "zero"};
  GridFunction g = compose_to_moyal(zero, 2, 16, 4.0, 2.0, sg, bg);
  CHECK(l2_norm(g) == 0);
  CHECK(g.ay.var == LP);
}

TEST_CASE("Gram injectivity") {
  GridFunction a = make_grid(16, 2), b = a;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      a(i, j) = std::exp(-a.ax.at(i) * a.ax.at(i) - a.ay.at(j) * a.ay.at(j));
      b(i, j) = a.ax.at(i) * a(i, j);
    }
  CHECK(gram_injectivity({a, b}).condition < 10);
  CHECK(gram_injectivity({a, a}).condition > 1e12);
}

TEST_CASE("property: T is linear and commutes with K") {
  SpectralGrid sg = small_sg();
  BoundaryGrid bg = BoundaryGrid::make(32);
  std::mt19937_64 rng(31);
  std::normal_distribution<double> nd;
  Intertwiner T(Multiplier::lorentzian(), 1, sg, bg);
  RadialFunction f = bump_profile(0, 1.5), g = bump_profile(0.5, 1.0, 0.3);
  Spectrum vf = radial_spectrum(f, sg, bg), vg = radial_spectrum(g, sg, bg);
  for (int trial = 0; trial < 5; ++trial) {
    cplx a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
    Spectrum vc = vf;
    for (size_t k = 0; k < vc.v.size(); ++k) vc.v[k] = a * vf.v[k] + b * vg.v[k];
    GroupElement x = group_from_cartan(std::abs(nd(rng)), nd(rng), nd(rng));
    cplx lhs = T.synthesize(vc, x), rhs = a * T.synthesize(vf, x) + b * T.synthesize(vg, x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs) + 1e-15);
    // radial input: T f is left K-invariant up to the boundary quadrature
    double ph = nd(rng);
    CHECK(std::abs(T.synthesize(vf, k_phi(ph) * x) - T.synthesize(vf, x)) < 1e-6 * std::abs(T.synthesize(vf, x)) + 1e-14);
  }
}
