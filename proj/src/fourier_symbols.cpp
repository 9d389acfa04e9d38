#include "sl2q/fourier_symbols.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace sl2q {

DiffOp FourierDictionary::lp_image() const { return Polynomial(GQ(0, kappa)) * DiffOp::d(ETA); }
DiffOp FourierDictionary::dlp_image() const { return DiffOp::mult(eta_() * GQ(0, kappa)); }

const FourierDictionary& default_dictionary() {
  static const FourierDictionary d{};
  return d;
}

namespace {

DiffOp power(const DiffOp& A, int k) {
  DiffOp r = DiffOp::identity();
  for (int i = 0; i < k; ++i) r = compose(r, A);
  return r;
}

}  // namespace

DiffOp fourier_conjugate(const DiffOp& D, const FourierDictionary& dict) {
  DiffOp lp = dict.lp_image(), dlp = dict.dlp_image();
  DiffOp r;
  for (const auto& [a, c] : D.terms()) {
    if (a[2] != 0 || c.max_exp(ETA) > 0)
      throw std::invalid_argument("fourier_conjugate: operator already involves eta");
    DiffOp tail = compose(DiffOp::d(L, a[0]), power(dlp, a[1]));
    for (const auto& [m, cm] : c.split(LP)) r += compose(cm * power(lp, m), tail);
  }
  return r;
}

Polynomial ComplexCoordinate::z() { return l_() + nu_() * eta_() * GQ::I(); }
Polynomial ComplexCoordinate::zbar() { return l_() - nu_() * eta_() * GQ::I(); }
DiffOp ComplexCoordinate::dz() {
  return Polynomial(GQ::frac(1, 2)) * DiffOp::d(L) + (nu_(-1) * GQ(0, mpq_class(-1, 2))) * DiffOp::d(ETA);
}
DiffOp ComplexCoordinate::dzbar() {
  return Polynomial(GQ::frac(1, 2)) * DiffOp::d(L) + (nu_(-1) * GQ(0, mpq_class(1, 2))) * DiffOp::d(ETA);
}

LiePoly ha_poly(const LieElement& A, const Polynomial& w) {
  auto d = decompose(A);
  LiePoly wl = w * LiePoly::E();
  return to_poly(d.h_part) + bracket(to_poly(d.lp_part), wl);
}

LiePoly la_poly(const LieElement& A, const Polynomial& w) {
  auto d = decompose(A);
  LiePoly wl = w * LiePoly::E();
  LiePoly inner = bracket(wl, bracket(wl, to_poly(d.lp_part)));
  return to_poly(d.l_part) + bracket(to_poly(d.h_part), wl) + Polynomial(GQ::frac(1, 2)) * inner;
}

Polynomial tau(const LieElement& A, const Polynomial& w, int eps) {
  const auto& fr = default_frame();
  LiePoly h = ha_poly(A, w);
  Polynomial b = killing(h, to_poly(fr.o));
  Polynomial sp = spur(h, fr);
  Polynomial r = b.shift_nu(-1) * GQ::frac(eps, 2) + sp * GQ::frac(1, 2);
  return r;
}

DiffOp Z_field(const LieElement& A) {
  LiePoly l = la_poly(A, ComplexCoordinate::z());
  return l.e * ComplexCoordinate::dz();
}

DiffOp Zbar_field(const LieElement& A) {
  LiePoly l = la_poly(A, ComplexCoordinate::zbar());
  return l.e * ComplexCoordinate::dzbar();
}

DiffOp verify_prop34(const LieElement& A, bool left) {
  Polynomial lam = moment_map(A);
  DiffOp S = left ? left_star_operator(lam) : right_star_operator(lam);
  DiffOp lhs = nu_(-1) * GQ::frac(1, 2) * fourier_conjugate(S);
  if (left) return lhs - (DiffOp::mult(tau(A, ComplexCoordinate::z(), 1)) + Z_field(A));
  return lhs + (DiffOp::mult(tau(A, ComplexCoordinate::zbar(), -1)) + Zbar_field(A));
}

DiffOp rho_hat(const LieElement& X) {
  return DiffOp::mult(rho_multiplier(X)) + Z_field(X) + Zbar_field(X);
}

Polynomial rho_multiplier(const LieElement& X) {
  return tau(X, ComplexCoordinate::z(), 1) + tau(X, ComplexCoordinate::zbar(), -1);
}

DiffOp Y_field(const LieElement& X) {
  Polynomial l = l_(), eta = eta_();
  DiffOp yE = DiffOp::d(L);
  DiffOp yH = (l * GQ(2)) * DiffOp::d(L) + (eta * GQ(2)) * DiffOp::d(ETA);
  DiffOp yF = (nu_(2) * eta * eta - l * l) * DiffOp::d(L) + (l * eta * GQ(-2)) * DiffOp::d(ETA);
  return Polynomial(X.e) * yE + Polynomial(X.h) * yH + Polynomial(X.f) * yF;
}

DiffOp rho_hat_display(const LieElement& X) {
  // Re z = l, Im z = nu eta
  Polynomial m = Polynomial(X.h * GQ(2)) - l_() * (X.f * GQ(2)) + eta_() * (X.f * GQ::I());
  return DiffOp::mult(m) + Y_field(X);
}

DiffOp dP_infinitesimal(const LieElement& X, const GQ& mu, const Polynomial& ell) {
  Polynomial z = ComplexCoordinate::z();
  // each real basis direction separately, then extend C-linearly
  auto field = [&](const Polynomial& w) {
    Polynomial re = (w + w.conj()) * GQ::frac(1, 2);
    Polynomial im_over_nu = ((w - w.conj()) * GQ(0, mpq_class(-1, 2))).shift_nu(-1);
    return re * DiffOp::d(L) + im_over_nu * DiffOp::d(ETA);
  };
  DiffOp dE = field(Polynomial(1));
  DiffOp dH = DiffOp::mult(Polynomial(-mu)) + field(z * GQ(2));
  DiffOp dF = DiffOp::mult(l_() * mu + ell * nu_() * eta_() * GQ::I()) + field(-(z * z));
  return Polynomial(X.e) * dE + Polynomial(X.h) * dH + Polynomial(X.f) * dF;
}

FlowResult flow_trajectory(const LieElement& X, std::complex<double> z0, double t_max, double dt,
                           double tol, double blowup) {
  if (!X.e.is_real() || !X.h.is_real() || !X.f.is_real())
    throw std::invalid_argument("flow_trajectory: generator must be real");
  const double e = X.e.re.get_d(), h = X.h.re.get_d(), f = X.f.re.get_d();
  auto rhs = [&](std::complex<double> z) { return e + 2.0 * h * z - f * z * z; };
  auto rk4 = [&](std::complex<double> z, double s) {
    auto k1 = rhs(z);
    auto k2 = rhs(z + 0.5 * s * k1);
    auto k3 = rhs(z + 0.5 * s * k2);
    auto k4 = rhs(z + s * k3);
    return z + s / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  FlowResult res;
  res.points.push_back({0.0, z0});
  double t = 0.0, step = dt;
  std::complex<double> z = z0;
  double next_out = dt;
  while (t < t_max - 1e-14) {
    double s = std::min({step, next_out - t, t_max - t});
    auto big = rk4(z, s);
    auto half = rk4(rk4(z, 0.5 * s), 0.5 * s);
    double err = std::abs(big - half) / 15.0;
    double scale = std::max(1.0, std::abs(half));
    if (err > tol * scale && s > 1e-14) {
      step = 0.5 * s;
      continue;
    }
    z = half + (half - big) / 15.0;
    t += s;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > blowup) {
      res.blew_up = true;
      break;
    }
    if (err < tol * scale / 64.0) step = std::min(2.0 * s, dt);
    if (t >= next_out - 1e-14) {
      res.points.push_back({t, z});
      next_out += dt;
    }
  }
  return res;
}

std::string generator_label(const LieElement& X) {
  if (X == LieElement::E()) return "E";
  if (X == LieElement::H()) return "H";
  if (X == LieElement::F()) return "F";
  return str(X);
}

void write_flow_csv(const std::string& path, const std::vector<std::pair<std::string, FlowResult>>& flows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "t,re_z,im_z,generator,status\n" << std::setprecision(17);
  for (const auto& [label, fr] : flows) {
    for (size_t i = 0; i < fr.points.size(); ++i) {
      const auto& p = fr.points[i];
      bool last = i + 1 == fr.points.size();
      out << p.t << ',' << p.z.real() << ',' << p.z.imag() << ',' << label << ','
          << (last && fr.blew_up ? "blowup" : "ok") << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sl2q
