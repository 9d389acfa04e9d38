#pragma once

#include "sl2q/diffop.hpp"
#include "sl2q/lie_sl2.hpp"

namespace sl2q {

// Weyl-Moyal product on the (l, l') plane with Lambda^{l l'} = sigma.
struct MoyalContext {
  int sigma = -1;
};

const MoyalContext& default_moyal();

// c_k(u, v) = sigma^k / k! sum_j C(k,j) (-1)^j (d_l^{k-j} d_l'^j u)(d_l'^{k-j} d_l^j v)
Polynomial star_coefficient(const Polynomial& u, const Polynomial& v, int k,
                            const MoyalContext& ctx = default_moyal());

// sum_k nu^k c_k(u, v); the sum is finite on polynomials.
Polynomial star(const Polynomial& u, const Polynomial& v, const MoyalContext& ctx = default_moyal());

// lambda_X * lambda_Y - lambda_Y * lambda_X - 2 nu {lambda_X, lambda_Y}
Polynomial covariance_residual(const LieElement& X, const LieElement& Y,
                               const MoyalContext& ctx = default_moyal());

// Smallest N >= 0 with c_k(lambda_X, u) = 0 for every k > N.
int property_B(const LieElement& X, const Polynomial& u, const MoyalContext& ctx = default_moyal());

// (1/2nu)(lambda_X * u - u * lambda_X); throws if the commutator has a nu^0 part.
Polynomial ad_star(const LieElement& X, const Polynomial& u, const MoyalContext& ctx = default_moyal());

// Operators u -> lambda * u and u -> u * lambda.
DiffOp left_star_operator(const Polynomial& lambda, const MoyalContext& ctx = default_moyal());
DiffOp right_star_operator(const Polynomial& lambda, const MoyalContext& ctx = default_moyal());

// Operator form of ad_star(X, .), extracted from the odd c_k.
DiffOp ad_star_as_diffop(const LieElement& X, const MoyalContext& ctx = default_moyal());

// Global sign s in ad([X,Y]) = s [ad X, ad Y], computed from (E, F).
int lie_action_sign(const MoyalContext& ctx = default_moyal());

}  // namespace sl2q
