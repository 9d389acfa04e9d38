#pragma once

#include "sl2q/diffop.hpp"
#include "sl2q/lie_sl2.hpp"

#include <random>

namespace sl2q {

using Rng = std::mt19937_64;

GQ random_gq(Rng& rng, int range = 5, bool complex = true);
LieElement random_lie(Rng& rng, bool complex = true);
// Random polynomial in (l, l') of total degree <= deg with up to `terms` monomials;
// with_nu also draws powers nu^0..nu^2.
Polynomial random_poly(Rng& rng, int deg, int terms, bool with_nu = false, bool with_eta = false);
DiffOp random_diffop(Rng& rng, int order, int coeff_deg, int terms);

}  // namespace sl2q
