#pragma once

#include "sl2q/diffop.hpp"
#include "sl2q/lie_sl2.hpp"
#include "sl2q/moyal.hpp"

#include <complex>
#include <string>
#include <vector>

namespace sl2q {

// Conjugation by the partial Fourier transform in l',
//   (F u)(l, eta) = int exp(-i kappa eta l') u(l, l') dl'.
// Multiplication by l' becomes i kappa d_eta and d_l' becomes i kappa eta.
struct FourierDictionary {
  int kappa = -1;
  DiffOp lp_image() const;
  DiffOp dlp_image() const;
};

const FourierDictionary& default_dictionary();

// F D F^{-1} for D with coefficients in (l, l', nu) and derivatives in (l, l').
DiffOp fourier_conjugate(const DiffOp& D, const FourierDictionary& dict = default_dictionary());

// z = l + i nu eta and its conjugate, d_z = (1/2nu)(nu d_l - i d_eta), d_zbar.
struct ComplexCoordinate {
  static Polynomial z();
  static Polynomial zbar();
  static DiffOp dz();
  static DiffOp dzbar();
};

// h_A(w) = A_h + [A_l', w E],  l_A(w) = A_l + [A_h, w E] + 1/2 [w E, [w E, A_l']]
LiePoly ha_poly(const LieElement& A, const Polynomial& w);
LiePoly la_poly(const LieElement& A, const Polynomial& w);

// tau_A^{(eps nu)}(w) = (1/(eps 2 nu)) (beta(h_A(w), o) + eps nu spur(h_A(w))), eps = +-1
Polynomial tau(const LieElement& A, const Polynomial& w, int eps = 1);

DiffOp Z_field(const LieElement& A);     // l_A(z) d_z
DiffOp Zbar_field(const LieElement& A);  // l_A(zbar) d_zbar

// Left:  (1/2nu) F(lambda_A * u) - (tau_A(z) + Z_A) u
// Right: (1/2nu) F(u * lambda_A) + (tau_A^{(-nu)}(zbar) + Zbar_A) u
DiffOp verify_prop34(const LieElement& A, bool left = true);

// rho_hat(X) = tau_X(z) + tau_X^{(-nu)}(zbar) + Z_X + Zbar_X
DiffOp rho_hat(const LieElement& X);
// Multiplier read as 2 X_h - 2 X_l' Re z + (i/nu) X_l' Im z plus the tabulated fields.
DiffOp rho_hat_display(const LieElement& X);
DiffOp Y_field(const LieElement& X);

// Infinitesimal principal series: multiplier mu (f l - h) + i ell f nu eta and
// the real field of w(z) d_z + conj, w = e + 2 h z - f z^2.
DiffOp dP_infinitesimal(const LieElement& X, const GQ& mu, const Polynomial& ell);

// Exact multiplier of rho_hat and the residual against the display form.
Polynomial rho_multiplier(const LieElement& X);

struct FlowPoint {
  double t;
  std::complex<double> z;
};

struct FlowResult {
  std::vector<FlowPoint> points;
  bool blew_up = false;
};

// Adaptive RK4 (step doubling) for dz/dt = e + 2 h z - f z^2, X real.
FlowResult flow_trajectory(const LieElement& X, std::complex<double> z0, double t_max, double dt,
                           double tol = 1e-11, double blowup = 1e8);

std::string generator_label(const LieElement& X);
void write_flow_csv(const std::string& path, const std::vector<std::pair<std::string, FlowResult>>& flows);

}  // namespace sl2q
