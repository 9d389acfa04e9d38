#include "sl2q/principal_series.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sl2q {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0, 1);

cplx phase_power(cplx w, int ell) {
  double r = std::abs(w);
  return std::pow(w / r, ell);
}
}  // namespace

GroupElement GroupElement::make(cplx a, cplx b, cplx c, cplx d, double tol) {
  GroupElement g{a, b, c, d};
  if (std::abs(g.det() - 1.0) > tol) throw std::invalid_argument("GroupElement: determinant differs from 1");
  return g;
}

GroupElement GroupElement::exp(cplx e, cplx h, cplx f) {
  // X^2 = delta I with delta = h^2 + e f
  cplx delta = h * h + e * f;
  cplx r = std::sqrt(delta);
  cplx ch = std::cosh(r);
  cplx sh = std::abs(r) < 1e-8 ? 1.0 + delta / 6.0 : std::sinh(r) / r;
  return {ch + sh * h, sh * e, sh * f, ch - sh * h};
}

GroupElement GroupElement::exp(const LieElement& X, double t) {
  return exp(t * X.e.to_complex(), t * X.h.to_complex(), t * X.f.to_complex());
}

GroupElement GroupElement::su11(cplx alpha, cplx beta) {
  double n = std::sqrt(std::norm(alpha) - std::norm(beta));
  if (!(n > 0)) throw std::invalid_argument("su11: |alpha| must exceed |beta|");
  alpha /= n;
  beta /= n;
  return {alpha, beta, std::conj(beta), std::conj(alpha)};
}

bool GroupElement::in_sl2r(double tol) const {
  return std::abs(a.imag()) <= tol && std::abs(b.imag()) <= tol && std::abs(c.imag()) <= tol &&
         std::abs(d.imag()) <= tol && std::abs(det() - 1.0) <= tol;
}

bool GroupElement::in_su11(double tol) const {
  return std::abs(d - std::conj(a)) <= tol && std::abs(c - std::conj(b)) <= tol && std::abs(det() - 1.0) <= tol;
}

bool GroupElement::in_su2(double tol) const {
  return std::abs(d - std::conj(a)) <= tol && std::abs(c + std::conj(b)) <= tol && std::abs(det() - 1.0) <= tol;
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

double distance(const GroupElement& x, const GroupElement& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

double norm(const Vec2& s) { return std::sqrt(std::norm(s[0]) + std::norm(s[1])); }

Vec2 normalize(const Vec2& s) {
  double n = norm(s);
  return {s[0] / n, s[1] / n};
}

Vec2 canonical_gauge(const Vec2& s) {
  Vec2 u = normalize(s);
  cplx lead = std::abs(u[0]) > 0 ? u[0] : u[1];
  cplx ph = std::conj(lead) / std::abs(lead);
  return {u[0] * ph, u[1] * ph};
}

cplx multiplier_noncompact(const GroupElement& g, cplx mu, int ell, cplx z) {
  GroupElement gi = g.inverse();
  cplx w = gi.c * z + gi.d;
  double r = std::abs(w);
  if (r == 0) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(mu * std::log(r)) * phase_power(w, ell);
}

PlaneFunction act_noncompact(const GroupElement& g, cplx mu, int ell, PlaneFunction f) {
  GroupElement gi = g.inverse();
  return [gi, mu, ell, f = std::move(f)](cplx z) -> cplx {
    cplx w = gi.c * z + gi.d;
    double r = std::abs(w);
    if (r < 1e-300) return {std::numeric_limits<double>::quiet_NaN(), 0};
    return std::exp(mu * std::log(r)) * phase_power(w, ell) * f((gi.a * z + gi.b) / w);
  };
}

SphereFunction act_compact(const GroupElement& g, cplx mu, SphereFunction phi) {
  GroupElement gi = g.inverse();
  return [gi, mu, phi = std::move(phi)](const Vec2& s) -> cplx {
    Vec2 v = gi.apply(s);
    double n = norm(v);
    return phi({v[0] / n, v[1] / n}) * std::exp(mu * std::log(n));
  };
}

cplx bracket_form(const Vec2& s, const Vec2& t) { return s[0] * std::conj(t[0]) - s[1] * std::conj(t[1]); }

Orbit orbit_classify(const Vec2& s, double eps) {
  double q = bracket_form(s, s).real() / (std::norm(s[0]) + std::norm(s[1]));
  if (q > eps) return Orbit::O1;
  if (q < -eps) return Orbit::O2;
  return Orbit::O3;
}

const char* orbit_name(Orbit o) {
  switch (o) {
    case Orbit::O1: return "O1";
    case Orbit::O2: return "O2";
    default: return "O3";
  }
}

SphereFunction map_A(SphereFunction phi, cplx mu, Orbit branch, double eps) {
  if (branch == Orbit::O3) throw std::invalid_argument("map_A: the null orbit carries no A-map");
  double sign = branch == Orbit::O1 ? 1.0 : -1.0;
  return [phi = std::move(phi), mu, sign, eps](const Vec2& s) -> cplx {
    double q = sign * bracket_form(s, s).real() / (std::norm(s[0]) + std::norm(s[1]));
    cplx v = phi(s);
    if (v == 0.0) return 0.0;
    if (q < eps) throw std::domain_error("map_A: support reaches the null cone or the wrong orbit");
    return std::exp(-0.5 * mu * std::log(q)) * v;
  };
}

CP1Quadrature CP1Quadrature::make(int panels, int order, int n_phi) {
  CP1Quadrature q;
  gsl_integration_glfixed_table* tab = gsl_integration_glfixed_table_alloc(order);
  double h = 2.0 / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = -1 + p * h, hi = lo + h;
    for (int i = 0; i < order; ++i) {
      double u, w;
      gsl_integration_glfixed_point(lo, hi, i, &u, &w, tab);
      double c = std::sqrt(0.5 * (1 + u)), s = std::sqrt(0.5 * (1 - u));
      for (int k = 0; k < n_phi; ++k) {
        double ph = 2 * kPi * k / n_phi;
        q.nodes.push_back({c, s * std::exp(kI * ph)});
        q.weights.push_back(0.5 * w / n_phi);
      }
    }
  }
  gsl_integration_glfixed_table_free(tab);
  return q;
}

cplx CP1Quadrature::integrate(const SphereFunction& f) const {
  cplx acc = 0;
  for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
  return acc;
}

cplx quadrature_CP1(const SphereFunction& f, int panels, int order, int n_phi) {
  return CP1Quadrature::make(panels, order, n_phi).integrate(f);
}

GroupElement cayley_element() {
  const double r = 1 / std::sqrt(2.0);
  return {r, kI * r, kI * r, r};
}

GroupElement cayley_conjugate(const GroupElement& g) {
  GroupElement C = cayley_element();
  return C.inverse() * g * C;
}

GroupElement cayley_conjugate_inverse(const GroupElement& g) {
  GroupElement C = cayley_element();
  return C * g * C.inverse();
}

SphereFunction picture_transfer(PlaneFunction f, cplx mu, int ell) {
  return [f = std::move(f), mu, ell](const Vec2& s) -> cplx {
    double r = std::abs(s[1]);
    if (r < 1e-300) return {std::numeric_limits<double>::quiet_NaN(), 0};
    return std::exp(mu * std::log(r)) * phase_power(s[1], ell) * f(s[0] / s[1]);
  };
}

PlaneFunction picture_transfer_inverse(SphereFunction phi, cplx mu) {
  return [phi = std::move(phi), mu](cplx z) -> cplx {
    double q = 1 + std::norm(z), r = std::sqrt(q);
    return std::exp(0.5 * mu * std::log(q)) * phi({z / r, 1.0 / r});
  };
}

SphereFunction homogeneous_bump(const Vec2& c, double r0, int k) {
  Vec2 cn = normalize(c);
  return [cn, r0, k](const Vec2& s) -> cplx {
    cplx p = std::conj(s[0]) * cn[0] + std::conj(s[1]) * cn[1];
    double r = std::norm(p);
    if (r <= r0) return 0.0;
    double u = (1 - r) / (1 - r0);
    if (u >= 1) return 0.0;
    return std::pow(p, k) * std::exp(1 - 1 / (1 - u * u));
  };
}

}  // namespace sl2q
