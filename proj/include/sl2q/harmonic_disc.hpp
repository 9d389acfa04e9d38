#pragma once

#include "sl2q/principal_series.hpp"
#include "sl2q/quadrature.hpp"
#include "sl2q/special.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sl2q {

// Haar normalization: int_G F = c0 int sinh t dt int dth/2pi int dps/2pi F(k_th a_t k_ps).
inline constexpr double kHaarC0 = 2 * 3.14159265358979323846;

// zeta_{n,s}(a_t) = (1-X)^s 2F1(s+n, s-n; 1; X), X = tanh^2(t/2)
cplx spherical_zeta(int n, cplx s, double t);
// (1/2pi) int_0^{2pi} (cosh t - sinh t cos th)^{-s} dth, trapezoid with m points.
cplx harish_chandra_zeta(cplx s, double t, int m = 1 << 15);

// a_t = [[cosh t/2, sinh t/2], [sinh t/2, cosh t/2]], k_ph = diag(e^{i ph}, e^{-i ph})
GroupElement a_t(double t);
GroupElement k_phi(double phi);

struct CartanCoords {
  double t, theta, psi;
};
// g = k_theta a_t k_psi with t >= 0; at t = 0 the split theta = psi is used.
CartanCoords cartan_coords(const GroupElement& g, double tol = 1e-10);
GroupElement group_from_cartan(double t, double theta, double psi);
GroupElement group_from_cartan(const CartanCoords& c);

// Section representative x(z) = (1/sqrt(1-|z|^2)) [[1, z], [conj z, 1]], x(z) 0 = z.
GroupElement disc_section(cplx z);
double hyperbolic_distance(cplx z, cplx w);

struct HaarRule {
  int nt = 64, ntheta = 32, npsi = 32, panels = 4;
};
cplx haar_integrate(const std::function<cplx(const GroupElement&)>& F, double t_max, const HaarRule& rule = {});

// Profile f(t) on [0, t_max) of a K-type n section f(k_th a_t k_ps) = e^{2in(th+ps)} f(t).
struct RadialFunction {
  std::function<double(double)> profile;
  double t_max = 6;
  int n = 0;
  std::string name;

  double operator()(double t) const { return t < t_max ? profile(t) : 0.0; }
};

// exp(1 - 1/(1 - u^2)) with u = (t - center)/width, times (1 + slope t^2).
RadialFunction bump_profile(double center, double width, double slope = 0.0, int n = 0);

// Shared radial quadrature (composite Gauss-Legendre on [0, t_max)).
Rule1D radial_rule(double t_max, int panels = 12, int order = 16);

// c0 int f(t) zeta_{n,s}(a_t) sinh t dt
cplx spherical_transform(const RadialFunction& f, cplx s, const Rule1D& rule);
cplx spherical_transform(const RadialFunction& f, cplx s);
// Transforms of several same-type profiles at several s; result[f][s].
std::vector<std::vector<cplx>> spherical_transform_batch(const std::vector<RadialFunction>& fs,
                                                         const std::vector<cplx>& svals, int t_panels = 12);
// c0 int |f(t)|^2 sinh t dt
double radial_norm2(const RadialFunction& f, const Rule1D& rule);
double radial_norm2(const RadialFunction& f);

struct PlancherelResult {
  double spatial = 0;         // |f|^2 by direct quadrature
  double continuous = 0;      // (1/2pi) int |f^(1/2+i tau)|^2 tau tanh(pi tau) d tau
  double discrete = 0;        // sum (p - 1/2) |f^(p)|^2
  double spectral = 0;        // continuous + discrete / 2pi
  double printed_grouping = 0;  // continuous + discrete
  double tau_max = 0;
  double tail_estimate = 0;
  std::vector<double> tau, density;
  std::vector<cplx> fhat;
  std::vector<std::pair<int, cplx>> discrete_values;
};

struct PlancherelOptions {
  double panel_width = 1.0;
  int order = 16;
  double tau_cap = 60;
  double tail_tol = 1e-8;
  int t_panels = 12;
};

// Throws std::runtime_error if the tau integral has not converged at the cap.
PlancherelResult plancherel_norm(const RadialFunction& f, const PlancherelOptions& opt = {});
// Several profiles with one shared zeta table.
std::vector<PlancherelResult> plancherel_batch(const std::vector<RadialFunction>& fs, const PlancherelOptions& opt = {});

void write_spectrum_csv(const std::string& path, const PlancherelResult& r);

}  // namespace sl2q
