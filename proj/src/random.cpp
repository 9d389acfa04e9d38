#include "sl2q/random.hpp"

namespace sl2q {

GQ random_gq(Rng& rng, int range, bool complex) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  mpq_class re(num(rng), den(rng));
  re.canonicalize();
  mpq_class im(0);
  if (complex) {
    im = mpq_class(num(rng), den(rng));
    im.canonicalize();
  }
  return GQ(re, im);
}

LieElement random_lie(Rng& rng, bool complex) {
  return {random_gq(rng, 5, complex), random_gq(rng, 5, complex), random_gq(rng, 5, complex)};
}

Polynomial random_poly(Rng& rng, int deg, int terms, bool with_nu, bool with_eta) {
  std::uniform_int_distribution<int> d(0, deg), nu(0, 2);
  Polynomial p;
  for (int i = 0; i < terms; ++i) {
    int a = d(rng), b = d(rng), c = with_eta ? d(rng) : 0;
    while (a + b + c > deg) {
      if (a > 0) --a;
      else if (b > 0) --b;
      else --c;
    }
    p += Polynomial::monomial({a, b, c, with_nu ? nu(rng) : 0}, random_gq(rng));
  }
  return p;
}

DiffOp random_diffop(Rng& rng, int order, int coeff_deg, int terms) {
  std::uniform_int_distribution<int> o(0, order);
  DiffOp D;
  for (int i = 0; i < terms; ++i) {
    DOrders a{o(rng), o(rng), o(rng)};
    while (a[0] + a[1] + a[2] > order) {
      if (a[0] > 0) --a[0];
      else if (a[1] > 0) --a[1];
      else --a[2];
    }
    D += DiffOp::term(a, random_poly(rng, coeff_deg, 3, true, true));
  }
  return D;
}

}  // namespace sl2q
