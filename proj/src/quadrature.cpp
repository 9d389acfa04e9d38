#include "sl2q/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <stdexcept>

namespace sl2q {

void Rule1D::append(const Rule1D& o) {
  x.insert(x.end(), o.x.begin(), o.x.end());
  w.insert(w.end(), o.w.begin(), o.w.end());
}

Rule1D gauss_legendre(double a, double b, int panels, int order) {
  if (panels < 1 || order < 1) throw std::invalid_argument("gauss_legendre: empty rule");
  Rule1D r;
  gsl_integration_glfixed_table* tab = gsl_integration_glfixed_table_alloc(order);
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    for (int i = 0; i < order; ++i) {
      double xi, wi;
      gsl_integration_glfixed_point(a + p * h, a + (p + 1) * h, i, &xi, &wi, tab);
      r.x.push_back(xi);
      r.w.push_back(wi);
    }
  }
  gsl_integration_glfixed_table_free(tab);
  return r;
}

}  // namespace sl2q
