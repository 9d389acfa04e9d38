#include "doctest.h"

#include "sl2q/fourier_symbols.hpp"
#include "sl2q/moyal.hpp"
#include "sl2q/random.hpp"

using namespace sl2q;

namespace {
const LieElement E = LieElement::E(), H = LieElement::H(), F = LieElement::F();
const LieElement basis[3] = {E, H, F};
}  // namespace

TEST_CASE("star product examples") {
  int s = default_moyal().sigma;
  CHECK(star(l_(), lp_()) == l_() * lp_() + nu_() * GQ(s));
  Polynomial v = l_() * l_() * lp_() + nu_() * GQ(3);
  CHECK(star(Polynomial(1), v) == v);
  CHECK(star(l_(), l_()) == l_() * l_());
}

TEST_CASE("star coefficients") {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    auto u = random_poly(rng, 4, 4), v = random_poly(rng, 4, 4);
    CHECK(star_coefficient(u, v, 0) == u * v);
    CHECK(star_coefficient(u, v, 1) == poisson(u, v, default_moyal().sigma));
    CHECK(star_coefficient(moment_map(F), u, 4).is_zero());
  }
  CHECK(star_coefficient(moment_map(E), moment_map(F), 1) == moment_map(H) * GQ(default_moyal().sigma));
}

TEST_CASE("star is associative") {
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng, 5, 3, true), b = random_poly(rng, 5, 3, true), c = random_poly(rng, 5, 3, true);
    CHECK(star(star(a, b), c) == star(a, star(b, c)));
  }
}

TEST_CASE("covariance on all basis pairs") {
  for (const auto& X : basis)
    for (const auto& Y : basis) CHECK(covariance_residual(X, Y).is_zero());
}

TEST_CASE("property B") {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    auto u = random_poly(rng, 8, 6);
    CHECK(property_B(E, u) <= 1);
    for (const auto& X : basis) CHECK(property_B(X, u) <= 3);
  }
  CHECK(property_B(H, Polynomial(GQ(5))) == 0);
  CHECK(property_B(F, l_() * lp_() * lp_()) == 3);
  CHECK(property_B(F, pow(lp_(), 5)) == 2);
}

TEST_CASE("ad_star examples and operator form") {
  int s = default_moyal().sigma;
  // {l', l} = -sigma
  CHECK(ad_star(E, l_()) == Polynomial(GQ(-s)));
  CHECK(ad_star(H, l_()) == l_() * GQ(-2 * s));
  CHECK(ad_star(F, Polynomial(1)).is_zero());
  CHECK(ad_star_as_diffop(E).order() == 1);
  DiffOp aF = ad_star_as_diffop(F);
  CHECK(aF.order() == 3);
  CHECK(!aF.coeff({1, 2, 0}).nu_part(2).is_zero());
  DiffOp expect = (Polynomial(1) + l_() * lp_() * GQ(2)) * DiffOp::d(LP) - (l_() * l_()) * DiffOp::d(L) -
                  nu_(2) * DiffOp::term({1, 2, 0}, Polynomial(1));
  CHECK(aF == expect);
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    auto X = random_lie(rng);
    auto u = random_poly(rng, 6, 5, true);
    CHECK(ad_star_as_diffop(X).apply(u) == ad_star(X, u));
  }
}

TEST_CASE("ad_star is a Lie action up to one global sign") {
  int s = lie_action_sign();
  CHECK(s == -1);
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    auto u = random_poly(rng, 6, 5, true);
    for (const auto& X : basis)
      for (const auto& Y : basis) {
        Polynomial lhs = ad_star(bracket(X, Y), u);
        Polynomial rhs = ad_star(X, ad_star(Y, u)) - ad_star(Y, ad_star(X, u));
        CHECK(lhs == rhs * GQ(s));
      }
  }
}

TEST_CASE("right star operator") {
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    auto lam = random_poly(rng, 3, 3, true), u = random_poly(rng, 5, 4, true);
    CHECK(right_star_operator(lam).apply(u) == star(u, lam));
    CHECK(left_star_operator(lam).apply(u) == star(lam, u));
  }
}
