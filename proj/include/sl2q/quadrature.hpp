#pragma once

#include <vector>

namespace sl2q {

struct Rule1D {
  std::vector<double> x, w;
  void append(const Rule1D& o);
};

// Composite Gauss-Legendre: `panels` equal panels of `order` nodes on [a, b].
Rule1D gauss_legendre(double a, double b, int panels, int order);

}  // namespace sl2q
