#include "sl2q/moyal.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2q {

namespace {

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// sigma^k / k! C(k,j) (-1)^j
GQ bidiff_weight(int sigma, int k, int j) {
  mpq_class w(binom(k, j), factorial(k));
  w.canonicalize();
  if (((sigma < 0) ? k : 0) % 2 == 1) w = -w;
  if (j % 2 == 1) w = -w;
  return GQ(w);
}

// c_k(lambda, .) as an operator.
DiffOp bidiff_operator(const Polynomial& lambda, int k, int sigma) {
  DiffOp D;
  for (int j = 0; j <= k; ++j) {
    Polynomial c = lambda.diff(L, k - j).diff(LP, j);
    if (c.is_zero()) continue;
    D += DiffOp::term({j, k - j, 0}, c * bidiff_weight(sigma, k, j));
  }
  return D;
}

}  // namespace

const MoyalContext& default_moyal() {
  static const MoyalContext ctx{};
  return ctx;
}

Polynomial star_coefficient(const Polynomial& u, const Polynomial& v, int k, const MoyalContext& ctx) {
  if (k < 0) throw std::invalid_argument("star_coefficient: negative order");
  Polynomial r;
  for (int j = 0; j <= k; ++j) {
    Polynomial a = u.diff(L, k - j).diff(LP, j);
    if (a.is_zero()) continue;
    Polynomial b = v.diff(LP, k - j).diff(L, j);
    if (b.is_zero()) continue;
    r += a * b * bidiff_weight(ctx.sigma, k, j);
  }
  return r;
}

Polynomial star(const Polynomial& u, const Polynomial& v, const MoyalContext& ctx) {
  int kmax = std::min(u.coord_degree(), v.coord_degree());
  Polynomial r;
  for (int k = 0; k <= kmax; ++k) r += star_coefficient(u, v, k, ctx).shift_nu(k);
  return r;
}

Polynomial covariance_residual(const LieElement& X, const LieElement& Y, const MoyalContext& ctx) {
  Polynomial lx = moment_map(X), ly = moment_map(Y);
  Polynomial r = star(lx, ly, ctx) - star(ly, lx, ctx);
  r -= poisson(lx, ly, ctx.sigma).shift_nu(1) * GQ(2);
  return r;
}

int property_B(const LieElement& X, const Polynomial& u, const MoyalContext& ctx) {
  Polynomial lx = moment_map(X);
  int kmax = std::min(lx.coord_degree(), u.coord_degree());
  int N = 0;
  for (int k = 0; k <= kmax; ++k)
    if (!star_coefficient(lx, u, k, ctx).is_zero()) N = k;
  // beyond kmax every c_k vanishes identically
  return N;
}

Polynomial ad_star(const LieElement& X, const Polynomial& u, const MoyalContext& ctx) {
  Polynomial lx = moment_map(X);
  Polynomial c = star(lx, u, ctx) - star(u, lx, ctx);
  if (!c.nu_part(0).is_zero())
    throw std::logic_error("ad_star: commutator has a nu^0 term: " + c.nu_part(0).str());
  return c.shift_nu(-1) * GQ::frac(1, 2);
}

DiffOp left_star_operator(const Polynomial& lambda, const MoyalContext& ctx) {
  DiffOp D;
  for (int k = 0; k <= lambda.coord_degree(); ++k) {
    DiffOp ck = bidiff_operator(lambda, k, ctx.sigma);
    D += nu_(k) * ck;
  }
  return D;
}

DiffOp right_star_operator(const Polynomial& lambda, const MoyalContext& ctx) {
  // c_k(u, v) = (-1)^k c_k(v, u)
  DiffOp D;
  for (int k = 0; k <= lambda.coord_degree(); ++k) {
    DiffOp ck = bidiff_operator(lambda, k, ctx.sigma);
    D += (nu_(k) * GQ(k % 2 ? -1 : 1)) * ck;
  }
  return D;
}

DiffOp ad_star_as_diffop(const LieElement& X, const MoyalContext& ctx) {
  Polynomial lx = moment_map(X);
  DiffOp D;
  for (int k = 1; k <= lx.coord_degree(); k += 2) D += nu_(k - 1) * bidiff_operator(lx, k, ctx.sigma);
  return D;
}

int lie_action_sign(const MoyalContext& ctx) {
  DiffOp a = ad_star_as_diffop(LieElement::E(), ctx);
  DiffOp b = ad_star_as_diffop(LieElement::F(), ctx);
  DiffOp c = ad_star_as_diffop(bracket(LieElement::E(), LieElement::F()), ctx);
  DiffOp k = commutator(a, b);
  if (k == c) return 1;
  if (k == -c) return -1;
  throw std::logic_error("lie_action_sign: ad_star is not a (anti-)homomorphism on (E, F)");
}

}  // namespace sl2q
