#include "sl2q/harmonic_disc.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sl2q {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0, 1);
}  // namespace

cplx spherical_zeta(int n, cplx s, double t) {
  if (t < 0) throw std::domain_error("spherical_zeta: t must be nonnegative");
  if (t == 0) return 1.0;
  double th = std::tanh(0.5 * t);
  double X = th * th;
  double ch = std::cosh(0.5 * t);
  double one_minus_X = 1 / (ch * ch);
  cplx pre = std::exp(s * std::log(one_minus_X));
  return pre * hyp2f1(s + double(n), s - double(n), 1.0, X, one_minus_X);
}

cplx harish_chandra_zeta(cplx s, double t, int m) {
  cplx acc = 0;
  double ch = std::cosh(t), sh = std::sinh(t);
  for (int k = 0; k < m; ++k) {
    double th = 2 * kPi * k / m;
    acc += std::exp(-s * std::log(ch - sh * std::cos(th)));
  }
  return acc / double(m);
}

GroupElement a_t(double t) { return {std::cosh(0.5 * t), std::sinh(0.5 * t), std::sinh(0.5 * t), std::cosh(0.5 * t)}; }

GroupElement k_phi(double phi) { return {std::exp(kI * phi), 0.0, 0.0, std::exp(-kI * phi)}; }

CartanCoords cartan_coords(const GroupElement& g, double tol) {
  if (!g.in_su11(tol)) throw std::invalid_argument("cartan_coords: element is not in SU(1,1)");
  double t = 2 * std::asinh(std::abs(g.b));
  double sum = std::arg(g.a);
  double diff = std::abs(g.b) > 1e-300 ? std::arg(g.b) : sum;
  if (std::abs(g.b) == 0) diff = 0;
  return {t, 0.5 * (sum + diff), 0.5 * (sum - diff)};
}

GroupElement group_from_cartan(double t, double theta, double psi) {
  double c = std::cosh(0.5 * t), s = std::sinh(0.5 * t);
  cplx alpha = c * std::exp(kI * (theta + psi)), beta = s * std::exp(kI * (theta - psi));
  return {alpha, beta, std::conj(beta), std::conj(alpha)};
}

GroupElement group_from_cartan(const CartanCoords& c) { return group_from_cartan(c.t, c.theta, c.psi); }

GroupElement disc_section(cplx z) {
  double r = 1 / std::sqrt(1 - std::norm(z));
  return {r, r * z, r * std::conj(z), r};
}

double hyperbolic_distance(cplx z, cplx w) {
  double q = std::abs((z - w) / (1.0 - std::conj(w) * z));
  return 2 * std::atanh(std::min(q, 1 - 1e-16));
}

cplx haar_integrate(const std::function<cplx(const GroupElement&)>& F, double t_max, const HaarRule& rule) {
  Rule1D rt = gauss_legendre(0, t_max, rule.panels, rule.nt / rule.panels);
  cplx acc = 0;
  for (size_t i = 0; i < rt.x.size(); ++i) {
    cplx inner = 0;
    for (int a = 0; a < rule.ntheta; ++a)
      for (int b = 0; b < rule.npsi; ++b)
        inner += F(group_from_cartan(rt.x[i], 2 * kPi * a / rule.ntheta, 2 * kPi * b / rule.npsi));
    acc += rt.w[i] * std::sinh(rt.x[i]) * inner / double(rule.ntheta * rule.npsi);
  }
  return kHaarC0 * acc;
}

RadialFunction bump_profile(double center, double width, double slope, int n) {
  RadialFunction f;
  f.profile = [center, width, slope](double t) {
    double u = (t - center) / width;
    if (std::abs(u) >= 1) return 0.0;
    return std::exp(1 - 1 / (1 - u * u)) * (1 + slope * t * t);
  };
  f.t_max = center + width;
  f.n = n;
  std::ostringstream os;
  os << "bump(c=" << center << ",w=" << width << ",k=" << slope << ",n=" << n << ")";
  f.name = os.str();
  return f;
}

Rule1D radial_rule(double t_max, int panels, int order) { return gauss_legendre(0, t_max, panels, order); }

cplx spherical_transform(const RadialFunction& f, cplx s, const Rule1D& rule) {
  cplx acc = 0;
  for (size_t i = 0; i < rule.x.size(); ++i) {
    double v = f(rule.x[i]);
    if (v == 0) continue;
    acc += rule.w[i] * v * std::sinh(rule.x[i]) * spherical_zeta(f.n, s, rule.x[i]);
  }
  return kHaarC0 * acc;
}

cplx spherical_transform(const RadialFunction& f, cplx s) { return spherical_transform(f, s, radial_rule(f.t_max)); }

std::vector<std::vector<cplx>> spherical_transform_batch(const std::vector<RadialFunction>& fs,
                                                         const std::vector<cplx>& svals, int t_panels) {
  std::vector<std::vector<cplx>> out(fs.size(), std::vector<cplx>(svals.size()));
  if (fs.empty()) return out;
  double tmax = 0;
  for (const auto& f : fs) {
    if (f.n != fs[0].n) throw std::invalid_argument("spherical_transform_batch: mixed K-types");
    tmax = std::max(tmax, f.t_max);
  }
  Rule1D rt = radial_rule(tmax, t_panels, 16);
  std::vector<double> fw(fs.size() * rt.x.size());
  for (size_t j = 0; j < fs.size(); ++j)
    for (size_t i = 0; i < rt.x.size(); ++i) fw[j * rt.x.size() + i] = fs[j](rt.x[i]) * rt.w[i] * std::sinh(rt.x[i]);
  for (size_t k = 0; k < svals.size(); ++k)
    for (size_t i = 0; i < rt.x.size(); ++i) {
      bool any = false;
      for (size_t j = 0; j < fs.size(); ++j) any = any || fw[j * rt.x.size() + i] != 0;
      if (!any) continue;
      cplx z = spherical_zeta(fs[0].n, svals[k], rt.x[i]);
      for (size_t j = 0; j < fs.size(); ++j) out[j][k] += kHaarC0 * fw[j * rt.x.size() + i] * z;
    }
  return out;
}

double radial_norm2(const RadialFunction& f, const Rule1D& rule) {
  double acc = 0;
  for (size_t i = 0; i < rule.x.size(); ++i) {
    double v = f(rule.x[i]);
    acc += rule.w[i] * v * v * std::sinh(rule.x[i]);
  }
  return kHaarC0 * acc;
}

double radial_norm2(const RadialFunction& f) { return radial_norm2(f, radial_rule(f.t_max, 24, 16)); }

std::vector<PlancherelResult> plancherel_batch(const std::vector<RadialFunction>& fs, const PlancherelOptions& opt) {
  if (fs.empty()) return {};
  const int n = fs[0].n;
  double tmax = 0;
  for (const auto& f : fs) {
    if (f.n != n) throw std::invalid_argument("plancherel_batch: mixed K-types");
    tmax = std::max(tmax, f.t_max);
  }
  Rule1D rt = radial_rule(tmax, opt.t_panels, 16);
  const size_t nt = rt.x.size(), nf = fs.size();
  // samples f(t) w sinh t, shared across all spectral parameters
  std::vector<double> fw(nf * nt);
  for (size_t j = 0; j < nf; ++j)
    for (size_t i = 0; i < nt; ++i) fw[j * nt + i] = fs[j](rt.x[i]) * rt.w[i] * std::sinh(rt.x[i]);

  auto transform_all = [&](cplx s, std::vector<cplx>& out) {
    out.assign(nf, 0.0);
    for (size_t i = 0; i < nt; ++i) {
      bool any = false;
      for (size_t j = 0; j < nf; ++j) any = any || fw[j * nt + i] != 0;
      if (!any) continue;
      cplx z = spherical_zeta(n, s, rt.x[i]);
      for (size_t j = 0; j < nf; ++j) out[j] += fw[j * nt + i] * z;
    }
    for (auto& v : out) v *= kHaarC0;
  };

  std::vector<PlancherelResult> res(nf);
  for (size_t j = 0; j < nf; ++j) res[j].spatial = radial_norm2(fs[j]);

  Rule1D panel = gauss_legendre(0, opt.panel_width, 1, opt.order);
  std::vector<cplx> vals;
  std::vector<double> last_panel(nf, 0), prev_panel(nf, 0);
  double tau0 = 0;
  bool converged = false;
  while (tau0 < opt.tau_cap - 1e-12) {
    std::vector<double> contrib(nf, 0);
    for (size_t q = 0; q < panel.x.size(); ++q) {
      double tau = tau0 + panel.x[q];
      double dens = tau * std::tanh(kPi * tau) / (2 * kPi);
      transform_all(cplx(0.5, tau), vals);
      for (size_t j = 0; j < nf; ++j) {
        contrib[j] += panel.w[q] * dens * std::norm(vals[j]);
        res[j].tau.push_back(tau);
        res[j].density.push_back(dens * 2 * kPi);
        res[j].fhat.push_back(vals[j]);
      }
    }
    bool small = true;
    for (size_t j = 0; j < nf; ++j) {
      res[j].continuous += contrib[j];
      prev_panel[j] = last_panel[j];
      last_panel[j] = contrib[j];
      small = small && contrib[j] <= opt.tail_tol * res[j].spatial && prev_panel[j] <= opt.tail_tol * res[j].spatial;
    }
    tau0 += opt.panel_width;
    if (small && tau0 >= 2 * opt.panel_width) {
      converged = true;
      break;
    }
  }
  for (size_t j = 0; j < nf; ++j) {
    res[j].tau_max = tau0;
    res[j].tail_estimate = last_panel[j];
  }
  if (!converged) {
    double worst = 0;
    for (size_t j = 0; j < nf; ++j) worst = std::max(worst, last_panel[j] / res[j].spatial);
    if (worst > 1e-6)
      throw std::runtime_error("plancherel_norm: tau integral not converged at cap, relative tail " + std::to_string(worst));
  }

  for (int p = 1; p <= std::abs(n); ++p) {
    transform_all(cplx(p, 0), vals);
    for (size_t j = 0; j < nf; ++j) {
      res[j].discrete += (p - 0.5) * std::norm(vals[j]);
      res[j].discrete_values.push_back({p, vals[j]});
    }
  }
  for (auto& r : res) {
    r.spectral = r.continuous + r.discrete / (2 * kPi);
    r.printed_grouping = r.continuous + r.discrete;
  }
  return res;
}

PlancherelResult plancherel_norm(const RadialFunction& f, const PlancherelOptions& opt) {
  return plancherel_batch({f}, opt)[0];
}

void write_spectrum_csv(const std::string& path, const PlancherelResult& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << std::setprecision(17) << "tau,re_fhat,im_fhat,density\n";
  for (size_t i = 0; i < r.tau.size(); ++i)
    out << r.tau[i] << ',' << r.fhat[i].real() << ',' << r.fhat[i].imag() << ',' << r.density[i] << '\n';
  out << "p,coefficient,abs_fhat_sq\n";
  for (const auto& [p, v] : r.discrete_values) out << p << ',' << (p - 0.5) << ',' << std::norm(v) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sl2q
