#include "doctest.h"

#include "sl2q/harmonic_disc.hpp"
#include "sl2q/special.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace sl2q;

namespace {
const double kPi = std::numbers::pi;
const cplx I(0, 1);
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("gamma helpers") {
  CHECK(rel(std::exp(lgamma_c(5.0)), 24.0) < 1e-13);
  CHECK(rel(std::exp(lgamma_c(cplx(0.5, 0))), std::sqrt(kPi)) < 1e-13);
  CHECK(rel(std::exp(lgamma_c(cplx(-0.5, 0))), -2 * std::sqrt(kPi)) < 1e-12);
  CHECK(rgamma_c(0.0) == 0.0);
  CHECK(rgamma_c(-3.0) == 0.0);
  // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
  for (double y : {0.3, 2.0, 7.5}) {
    cplx g = std::exp(lgamma_c(cplx(0.5, y)));
    CHECK(std::abs(std::norm(g) / (kPi / std::cosh(kPi * y)) - 1) < 1e-12);
  }
}

TEST_CASE("hypergeometric closed forms") {
  for (double x : {0.1, 0.5, 0.9, 0.999}) {
    CHECK(rel(hyp2f1(1, 1, 2, x), -std::log1p(-x) / x) < 1e-12);
    CHECK(rel(hyp2f1(cplx(0.3, 1.2), cplx(2.5, -1), cplx(2.5, -1), x), std::pow(1 - x, -cplx(0.3, 1.2))) < 1e-11);
    double s = std::sqrt(x);
    CHECK(rel(hyp2f1(0.5, 0.5, 1.5, x), std::asin(s) / s) < 1e-11);
  }
  // terminating: 2F1(-3, b; c; x) is a cubic
  cplx b(1.5, 0.5), c(2.0, -1.0);
  double x = 0.7;
  cplx poly = 1.0 - 3.0 * b / c * x + 3.0 * b * (b + 1.0) / (c * (c + 1.0)) * x * x -
              b * (b + 1.0) * (b + 2.0) / (c * (c + 1.0) * (c + 2.0)) * x * x * x;
  CHECK(rel(hyp2f1(-3, b, c, x), poly) < 1e-14);
}

TEST_CASE("hypergeometric against high-precision reference values") {
  // reference values computed once at 30 digits
  CHECK(rel(hyp2f1(cplx(0.5, 2), cplx(0.5, -2), 1, 0.95), 85.401482808461741064) < 1e-11);
  CHECK(rel(hyp2f1(cplx(2.5, 3), cplx(-1.5, 3), 1, 0.9), cplx(0.073911920031371325777, 0.053277986137431146429)) < 1e-10);
  CHECK(rel(hyp2f1(cplx(0.5, 10), cplx(0.5, -10), 1, 0.999), 10332000064504.543767) < 1e-10);
  CHECK(rel(hyp2f1(cplx(1.5, 0.5), cplx(-0.5, 0.5), 1, 0.3), cplx(0.65543871309264124654, 0.11814444549314879092)) < 1e-12);
  auto r = hyp2f1_ex(cplx(0.5, 2), cplx(0.5, -2), 1, 0.95);
  CHECK(r.error_bound < 1e-9);
}

TEST_CASE("spherical functions") {
  // n = 0, s = 1/2 + i tau against the Harish-Chandra integral
  for (double tau : {0.5, 2.0, 10.0})
    for (double t : {0.1, 1.0, 3.0, 5.0}) {
      cplx s(0.5, tau);
      CHECK(rel(spherical_zeta(0, s, t), harish_chandra_zeta(s, t)) < 1e-8);
    }
  for (int n = -3; n <= 3; ++n) CHECK(spherical_zeta(n, cplx(0.5, 1.3), 0.0) == 1.0);
  // s and 1 - s give the same function (Weyl group symmetry)
  CHECK(rel(spherical_zeta(2, cplx(0.5, 1.7), 2.2), spherical_zeta(2, cplx(0.5, -1.7), 2.2)) < 1e-11);
  // zeta_{0,0}(a_t) = (1 - X)^0 = 1, and zeta_{0,1} = 1 - X + ... = sech^2 * 2F1(1,1;1;X) = 1
  CHECK(std::abs(spherical_zeta(0, 0.0, 1.7) - 1.0) < 1e-14);
  CHECK(std::abs(spherical_zeta(0, 1.0, 1.7) - 1.0) < 1e-13);
  // n <-> -n symmetry of 2F1(s+n, s-n)
  CHECK(rel(spherical_zeta(3, cplx(0.5, 0.4), 1.1), spherical_zeta(-3, cplx(0.5, 0.4), 1.1)) < 1e-13);
}

TEST_CASE("Cartan coordinates and the disc section") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 2 * kPi), ut(0.01, 4);
  for (int i = 0; i < 50; ++i) {
    double t = ut(rng), th = u(rng), ps = u(rng);
    GroupElement g = group_from_cartan(t, th, ps);
    REQUIRE(g.in_su11(1e-12));
    CartanCoords c = cartan_coords(g);
    CHECK(c.t == doctest::Approx(t).epsilon(1e-12));
    CHECK(distance(group_from_cartan(c), g) < 1e-12);
  }
  CHECK_THROWS_AS(cartan_coords(GroupElement::exp(0.3, 0.1, 0.2)), std::invalid_argument);
  cplx z(0.3, -0.5);
  GroupElement x = disc_section(z);
  CHECK(x.in_su11(1e-13));
  CHECK(std::abs(x.mobius(0.0) - z) < 1e-15);
  CHECK(hyperbolic_distance(0.0, std::tanh(0.5 * 1.3)) == doctest::Approx(1.3));
  CHECK(std::abs(a_t(1.3).mobius(0.0) - std::tanh(0.65)) < 1e-15);
}

TEST_CASE("Haar integration") {
  // f(k a_t k) = exp(-t^2): integral = c0 int exp(-t^2) sinh t dt
  auto F = [](const GroupElement& g) { return cplx(std::exp(-std::pow(cartan_coords(g).t, 2))); };
  Rule1D r = radial_rule(6.0, 12, 16);
  double ref = 0;
  for (size_t i = 0; i < r.x.size(); ++i) ref += r.w[i] * std::exp(-r.x[i] * r.x[i]) * std::sinh(r.x[i]);
  ref *= kHaarC0;
  CHECK(rel(haar_integrate(F, 6.0), ref) < 1e-10);
  // left invariance for a non-K-invariant integrand
  auto Fz = [](const GroupElement& g) {
    cplx z = g.mobius(0.0);
    double d = hyperbolic_distance(z, 0.2);
    return d < 1.5 ? cplx(std::exp(1 - 1 / (1 - d * d / 2.25)) * (1 + z.real())) : cplx(0);
  };
  GroupElement g0 = GroupElement::su11(cplx(1.1, 0.3), cplx(0.2, -0.35));
  HaarRule fine{96, 64, 8, 6};
  cplx a = haar_integrate(Fz, 3.5, fine);
  cplx b = haar_integrate([&](const GroupElement& g) { return Fz(g0 * g); }, 3.5, fine);
  CHECK(rel(b, a) < 1e-6);
}

TEST_CASE("spherical transform") {
  RadialFunction f = bump_profile(0, 2.0, 0.3);
  // s = 1 makes zeta_{0,1} = 1, so the transform is the integral of f
  CHECK(rel(spherical_transform(f, 1.0), [&] {
          Rule1D r = radial_rule(2.0, 24, 16);
          double acc = 0;
          for (size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * f(r.x[i]) * std::sinh(r.x[i]);
          return cplx(kHaarC0 * acc);
        }()) < 1e-12);
  // agreement with a 4x finer radial rule
  for (double tau : {0.5, 3.0, 12.0}) {
    cplx s(0.5, tau);
    CHECK(rel(spherical_transform(f, s), spherical_transform(f, s, radial_rule(f.t_max, 48, 16))) < 1e-8);
  }
  // real profiles have real transforms on the principal line, symmetric in tau
  cplx v = spherical_transform(f, cplx(0.5, 2.5));
  CHECK(std::abs(v.imag()) < 1e-12 * std::abs(v));
  CHECK(rel(spherical_transform(f, cplx(0.5, -2.5)), v) < 1e-12);
  auto batch = spherical_transform_batch({f, bump_profile(1, 0.7)}, {cplx(0.5, 1), cplx(0.5, 4)});
  CHECK(rel(batch[0][1], spherical_transform(f, cplx(0.5, 4))) < 1e-12);
}

TEST_CASE("Plancherel identity") {
  std::vector<PlancherelResult> rs = {plancherel_norm(bump_profile(0, 2.0, 0.3, 0)), plancherel_norm(bump_profile(0.5, 1.5, 0.0, 2))};
  CHECK_THROWS_AS(plancherel_batch({bump_profile(0, 1, 0, 0), bump_profile(0, 1, 0, 1)}), std::invalid_argument);
  CHECK(std::abs(rs[0].spectral / rs[0].spatial - 1) < 1e-6);
  CHECK(rs[0].discrete == 0);
  CHECK(std::abs(rs[1].spectral / rs[1].spatial - 1) < 1e-6);
  CHECK(rs[1].discrete_values.size() == 2);
  // the grouping with 1/2pi on the integral only does not reproduce the norm for l != 0
  CHECK(rs[1].printed_grouping / rs[1].spatial > 1.5);
}
