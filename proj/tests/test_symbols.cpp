#include "doctest.h"

#include "sl2q/fourier_symbols.hpp"
#include "sl2q/random.hpp"

#include <cmath>

using namespace sl2q;

namespace {
const LieElement E = LieElement::E(), H = LieElement::H(), F = LieElement::F();
const LieElement basis[3] = {E, H, F};
Polynomial z() { return ComplexCoordinate::z(); }
}  // namespace

TEST_CASE("complex coordinate") {
  CHECK(ComplexCoordinate::dz().apply(z()) == Polynomial(1));
  CHECK(ComplexCoordinate::dz().apply(ComplexCoordinate::zbar()).is_zero());
  CHECK(ComplexCoordinate::dzbar().apply(ComplexCoordinate::zbar()) == Polynomial(1));
  CHECK(ComplexCoordinate::dzbar().apply(z()).is_zero());
}

TEST_CASE("fourier dictionary") {
  const auto& d = default_dictionary();
  CHECK(fourier_conjugate(DiffOp::mult(lp_())) == d.lp_image());
  CHECK(fourier_conjugate(DiffOp::mult(lp_())) == Polynomial(GQ(0, -1)) * DiffOp::d(ETA));
  CHECK(fourier_conjugate(DiffOp::d(L)) == DiffOp::d(L));
  CHECK(fourier_conjugate(DiffOp::mult(lp_() * lp_())) == -DiffOp::d(ETA, 2));
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    DiffOp A = random_poly(rng, 2, 2, true) * DiffOp::term({rng() % 2 == 0 ? 1 : 0, static_cast<int>(rng() % 3), 0}, Polynomial(1));
    DiffOp B = random_poly(rng, 2, 2, true) * DiffOp::term({static_cast<int>(rng() % 2), 1, 0}, Polynomial(1));
    CHECK(fourier_conjugate(compose(A, B)) == compose(fourier_conjugate(A), fourier_conjugate(B)));
  }
}

TEST_CASE("h_A, l_A, tau and Z fields") {
  CHECK(ha_poly(E, z()) == LiePoly{Polynomial(0), Polynomial(0), Polynomial(0)});
  CHECK(la_poly(E, z()) == LiePoly::E());
  CHECK(ha_poly(H, z()) == LiePoly::H());
  CHECK(la_poly(H, z()) == LiePoly{z() * GQ(2), Polynomial(0), Polynomial(0)});
  CHECK(ha_poly(F, z()) == LiePoly{Polynomial(0), -z(), Polynomial(0)});
  CHECK(la_poly(F, z()) == LiePoly{-(z() * z()), Polynomial(0), Polynomial(0)});
  CHECK(tau(E, z()).is_zero());
  CHECK(tau(H, z()) == nu_(-1) * GQ::frac(1, 2) + Polynomial(1));
  CHECK(tau(F, z()) == -(z() * (nu_(-1) * GQ::frac(1, 2) + Polynomial(1))));
  CHECK(Z_field(E) == ComplexCoordinate::dz());
  CHECK(Z_field(H) == (z() * GQ(2)) * ComplexCoordinate::dz());
  CHECK(Z_field(F) == (-(z() * z())) * ComplexCoordinate::dz());
}

TEST_CASE("left and right star symbol identities") {
  for (const auto& A : basis) {
    CHECK(verify_prop34(A, true).is_zero());
    CHECK(verify_prop34(A, false).is_zero());
  }
}

TEST_CASE("rho_hat") {
  CHECK(rho_hat(E) == DiffOp::d(L));
  CHECK(rho_hat(H) == DiffOp::mult(Polynomial(2)) + (l_() * GQ(2)) * DiffOp::d(L) + (eta_() * GQ(2)) * DiffOp::d(ETA));
  CHECK(rho_multiplier(F) == l_() * GQ(-2) - eta_() * GQ::I());
  CHECK(rho_hat_display(F) == DiffOp::mult(l_() * GQ(-2) + eta_() * GQ::I()) + Y_field(F));
  for (const auto& X : basis) {
    CHECK(fourier_conjugate(ad_star_as_diffop(X)) == rho_hat(X));
    CHECK(rho_hat(X) - DiffOp::mult(rho_multiplier(X)) == Y_field(X));
  }
}

TEST_CASE("principal series generators") {
  Polynomial inv_nu = nu_(-1);
  for (const auto& X : basis) {
    CHECK(rho_hat_display(X) == dP_infinitesimal(X, GQ(-2), inv_nu));
    CHECK(rho_hat(X) == dP_infinitesimal(X, GQ(-2), -inv_nu));
  }
  CHECK(dP_infinitesimal(E, GQ(3), Polynomial(5)) == DiffOp::d(L));
  Polynomial ell = Polynomial(GQ(7));
  GQ mu = GQ(-3);
  CHECK(dP_infinitesimal(F, mu, ell) ==
        DiffOp::mult(l_() * mu + ell * nu_() * eta_() * GQ::I()) + Y_field(F));
  int s = -1;
  for (const auto& X : basis)
    for (const auto& Y : basis) {
      CHECK(commutator(rho_hat(X), rho_hat(Y)) == Polynomial(GQ(s)) * rho_hat(bracket(X, Y)));
      CHECK(commutator(rho_hat_display(X), rho_hat_display(Y)) == Polynomial(GQ(s)) * rho_hat_display(bracket(X, Y)));
    }
  Rng rng(9);
  for (int i = 0; i < 5; ++i) {
    auto X = random_lie(rng), Y = random_lie(rng);
    CHECK(commutator(rho_hat(X), rho_hat(Y)) == Polynomial(GQ(s)) * rho_hat(bracket(X, Y)));
  }
}

TEST_CASE("flows") {
  auto fe = flow_trajectory(E, {0.3, 0.5}, 2.0, 0.1);
  for (auto& p : fe.points) CHECK(std::abs(p.z - std::complex<double>(0.3 + p.t, 0.5)) < 1e-12);
  auto fh = flow_trajectory(H, {0.3, 0.5}, 2.0, 0.1);
  for (auto& p : fh.points) CHECK(std::abs(p.z - std::complex<double>(0.3, 0.5) * std::exp(2 * p.t)) < 1e-8 * std::exp(2 * p.t));
  auto ff = flow_trajectory(F, {0.0, 1.0}, 5.0, 0.1);
  for (auto& p : ff.points) {
    auto exact = 1.0 / (1.0 / std::complex<double>(0, 1) + p.t);
    CHECK(std::abs(p.z - exact) < 1e-8);
    CHECK(p.z.imag() > 0);
  }
  auto blow = flow_trajectory(F, {-1.0, 0.0}, 3.0, 0.05);
  CHECK(blow.blew_up);
  CHECK_THROWS(flow_trajectory(LieElement{GQ(0, 1), GQ(0), GQ(0)}, {0, 0}, 1, 0.1));
}
