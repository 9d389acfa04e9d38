#include "sl2q/intertwiner.hpp"

#include "sl2q/fourier_symbols.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sl2q {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0, 1);

double poisson_kernel(cplx z, cplx b) { return (1 - std::norm(z)) / std::norm(b - z); }

double bump1(double u) { return std::abs(u) < 1 ? std::exp(1 - 1 / (1 - u * u)) : 0.0; }
}  // namespace

SpectralGrid SpectralGrid::make(double tau_max, int panels, int order) {
  Rule1D r = gauss_legendre(0, tau_max, panels, order);
  SpectralGrid g;
  g.tau = r.x;
  for (size_t i = 0; i < r.x.size(); ++i) g.w.push_back(r.w[i] * r.x[i] * std::tanh(kPi * r.x[i]) / (2 * kPi));
  return g;
}

BoundaryGrid BoundaryGrid::make(int nb) {
  BoundaryGrid g;
  for (int j = 0; j < nb; ++j) g.b.push_back(std::exp(kI * (2 * kPi * j / nb)));
  return g;
}

DiscQuadrature DiscQuadrature::make(double R, int nt, int na, cplx center, int panels) {
  Rule1D rt = gauss_legendre(0, R, panels, nt / panels);
  GroupElement gc = disc_section(center);
  DiscQuadrature q;
  for (size_t i = 0; i < rt.x.size(); ++i) {
    double r = std::tanh(0.5 * rt.x[i]), w = rt.w[i] * std::sinh(rt.x[i]) * 2 * kPi / na;
    for (int k = 0; k < na; ++k) {
      q.z.push_back(gc.mobius(r * std::exp(kI * (2 * kPi * k / na))));
      q.w.push_back(w);
    }
  }
  return q;
}

double Multiplier::sup(const SpectralGrid& g) const {
  double s = 0;
  for (double t : g.tau) s = std::max(s, std::abs(m(t)));
  return s;
}

double Multiplier::inf_abs(const SpectralGrid& g) const {
  double s = std::numeric_limits<double>::infinity();
  for (double t : g.tau) s = std::min(s, std::abs(m(t)));
  return s;
}

Multiplier Multiplier::constant(double c) { return {"constant", [c](double) { return c; }}; }
Multiplier Multiplier::lorentzian() { return {"lorentzian", [](double t) { return 1 / (1 + t * t); }}; }
Multiplier Multiplier::linear() { return {"linear", [](double t) { return t; }}; }

Spectrum fourier_delta(const std::vector<cplx>& values, int n, const DiscQuadrature& q, const SpectralGrid& sg,
                       const BoundaryGrid& bg) {
  if (values.size() != q.size()) throw std::invalid_argument("fourier_delta: sample count mismatch");
  Spectrum out{bg.size(), sg.size(), std::vector<cplx>(bg.size() * sg.size())};
  const size_t nt = sg.size();
  std::vector<double> cs(nt), sn(nt);
  for (size_t j = 0; j < q.size(); ++j) {
    cplx wf = q.w[j] * values[j];
    if (wf == 0.0) continue;
    cplx z = q.z[j];
    for (size_t ib = 0; ib < bg.size(); ++ib) {
      cplx b = bg.b[ib];
      double P = poisson_kernel(z, b), L = std::log(P);
      cplx c = wf * std::sqrt(P);
      if (n != 0) c *= std::pow((b - z) / (1.0 - std::conj(z) * b), n);
      cplx* row = &out.v[ib * nt];
      for (size_t k = 0; k < nt; ++k) {
        double a = sg.tau[k] * L;
        row[k] += c * cplx(std::cos(a), std::sin(a));
      }
    }
  }
  return out;
}

Spectrum fourier_delta(const DeltaSection& f, const DiscQuadrature& q, const SpectralGrid& sg, const BoundaryGrid& bg) {
  std::vector<cplx> vals(q.size());
  for (size_t j = 0; j < q.size(); ++j) vals[j] = f(disc_section(q.z[j]));
  return fourier_delta(vals, f.n, q, sg, bg);
}

Spectrum helgason_transform(const std::function<cplx(cplx)>& f, const DiscQuadrature& q, const SpectralGrid& sg,
                            const BoundaryGrid& bg) {
  std::vector<cplx> vals(q.size());
  for (size_t j = 0; j < q.size(); ++j) vals[j] = f(q.z[j]);
  return fourier_delta(vals, 0, q, sg, bg);
}

Spectrum radial_spectrum(const RadialFunction& f, const SpectralGrid& sg, const BoundaryGrid& bg) {
  if (f.n != 0) throw std::invalid_argument("radial_spectrum: input must have K-type 0");
  std::vector<cplx> svals;
  for (double t : sg.tau) svals.push_back(cplx(0.5, t));
  auto fh = spherical_transform_batch({f}, svals)[0];
  Spectrum out{bg.size(), sg.size(), std::vector<cplx>(bg.size() * sg.size())};
  for (size_t ib = 0; ib < bg.size(); ++ib)
    for (size_t k = 0; k < sg.size(); ++k) out.at(ib, k) = fh[k];
  return out;
}

std::vector<cplx> k_type_component(const Spectrum& v, int n, const BoundaryGrid& bg) {
  std::vector<cplx> out(v.ntau);
  for (size_t ib = 0; ib < v.nb; ++ib) {
    cplx c = std::conj(std::pow(bg.b[ib], n)) / double(v.nb);
    for (size_t k = 0; k < v.ntau; ++k) out[k] += v.at(ib, k) * c;
  }
  return out;
}

DeltaSection bi_equivariant_section(const RadialFunction& f) {
  return {f.n, [f](const GroupElement& x) {
            CartanCoords c = cartan_coords(x, 1e-8);
            return f(c.t) * std::exp(kI * (2.0 * f.n * (c.theta + c.psi)));
          }};
}

Intertwiner::Intertwiner(Multiplier M, int n, SpectralGrid sg, BoundaryGrid bg)
    : M_(std::move(M)), n_(n), sg_(std::move(sg)), bg_(std::move(bg)) {
  for (size_t k = 0; k < sg_.size(); ++k) wm_.push_back(sg_.w[k] * M_(sg_.tau[k]));
}

cplx Intertwiner::synthesize(const Spectrum& v, const GroupElement& x) const {
  if (v.nb != bg_.size() || v.ntau != sg_.size()) throw std::invalid_argument("synthesize: spectrum grid mismatch");
  cplx z0 = x.b / x.d;
  GroupElement xi = x.inverse();
  const size_t nt = sg_.size();
  cplx acc = 0;
  for (size_t ib = 0; ib < bg_.size(); ++ib) {
    cplx b = bg_.b[ib];
    double P = poisson_kernel(z0, b), L = std::log(P);
    cplx c = std::sqrt(P);
    if (n_ != 0) c *= std::conj(std::pow(xi.mobius(b), n_));
    const cplx* row = &v.v[ib * nt];
    cplx inner = 0;
    for (size_t k = 0; k < nt; ++k) {
      double a = sg_.tau[k] * L;
      inner += wm_[k] * row[k] * cplx(std::cos(a), -std::sin(a));
    }
    acc += c * inner;
  }
  return acc / double(bg_.size());
}

DeltaSection Intertwiner::apply(Spectrum v) const {
  auto self = *this;
  return {n_, [self, v = std::move(v)](const GroupElement& x) { return self.synthesize(v, x); }};
}

DeltaSection build_T(const Intertwiner& T, const RadialFunction& f, std::vector<std::string>* warnings) {
  if (warnings && T.multiplier().inf_abs(T.spectral()) == 0)
    warnings->push_back("build_T: multiplier vanishes on the spectral grid; injectivity is lost there");
  return T.apply(radial_spectrum(f, T.spectral(), T.boundary()));
}

double section_residual(const DeltaSection& a, const DeltaSection& b, const std::vector<GroupElement>& xs) {
  double num = 0, den = 0;
  for (const auto& x : xs) {
    cplx va = a(x), vb = b(x);
    num += std::norm(va - vb);
    den += std::norm(vb);
  }
  return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

double k_equivariance_residual(const DeltaSection& f, const std::vector<GroupElement>& xs,
                               const std::vector<double>& phis) {
  double worst = 0, scale = 0;
  for (const auto& x : xs) {
    cplx v = f(x);
    scale = std::max(scale, std::abs(v));
    for (double ph : phis) worst = std::max(worst, std::abs(f(x * k_phi(ph)) - std::exp(kI * (2.0 * f.n * ph)) * v));
  }
  return scale > 0 ? worst / scale : worst;
}

std::vector<GroupElement> sample_points(int count, double t_max, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ut(0, t_max), ua(0, 2 * kPi);
  std::vector<GroupElement> xs;
  for (int i = 0; i < count; ++i) {
    double t = ut(rng), th = ua(rng), ps = ua(rng);
    xs.push_back(group_from_cartan(t, th, ps));
  }
  return xs;
}

EquivarianceResult check_equivariance(const Intertwiner& T, const GroupElement& g, const RadialFunction& f, int nt,
                                      int na, const std::vector<GroupElement>& xs) {
  if (!g.in_su11(1e-10)) throw std::invalid_argument("check_equivariance: g must lie in SU(1,1)");
  double shift = hyperbolic_distance(g.mobius(0.0), 0.0);
  double R = shift + f.t_max;
  if (R > 12) throw std::invalid_argument("check_equivariance: translated support exceeds the quadrature range");
  GroupElement gi = g.inverse();
  auto Lg = [&](cplx z) -> cplx { return f(hyperbolic_distance(gi.mobius(z), 0.0)); };
  Spectrum vg = helgason_transform(Lg, DiscQuadrature::make(R, nt, na), T.spectral(), T.boundary());
  Spectrum vf = radial_spectrum(f, T.spectral(), T.boundary());
  DeltaSection lhs = T.apply(vg);
  DeltaSection tf = T.apply(vf);
  DeltaSection rhs{T.n(), [tf, gi](const GroupElement& x) { return tf(gi * x); }};
  return {section_residual(lhs, rhs, xs), nt, na};
}

EquivarianceResult check_equivariance(const Intertwiner& T, const GroupElement& g, const std::function<cplx(cplx)>& f,
                                      double support, int nt, int na, const std::vector<GroupElement>& xs) {
  if (!g.in_su11(1e-10)) throw std::invalid_argument("check_equivariance: g must lie in SU(1,1)");
  double R = hyperbolic_distance(g.mobius(0.0), 0.0) + support;
  if (R > 12) throw std::invalid_argument("check_equivariance: translated support exceeds the quadrature range");
  GroupElement gi = g.inverse();
  DiscQuadrature q = DiscQuadrature::make(R, nt, na);
  Spectrum vg = helgason_transform([&](cplx z) { return f(gi.mobius(z)); }, q, T.spectral(), T.boundary());
  DeltaSection lhs = T.apply(vg);
  DeltaSection tf = T.apply(helgason_transform(f, q, T.spectral(), T.boundary()));
  DeltaSection rhs{T.n(), [tf, gi](const GroupElement& x) { return tf(gi * x); }};
  return {section_residual(lhs, rhs, xs), nt, na};
}

DeltaSection bump_section(int n, cplx center, double radius) {
  return {n, [n, center, radius](const GroupElement& x) -> cplx {
            cplx z = x.b / x.d;
            double B = bump1(hyperbolic_distance(z, center) / radius);
            if (B == 0) return 0.0;
            return B * std::pow(x.a / std::abs(x.a), 2 * n);
          }};
}

WeakConsistency weak_spectral_consistency(const Intertwiner& T, const Spectrum& vf, cplx center, double radius,
                                          int nt_spatial, int na_spatial, int nt_spec, int na_spec) {
  DeltaSection h = bump_section(T.n(), center, radius);
  DiscQuadrature qs = DiscQuadrature::make(radius, nt_spatial, na_spatial, center);
  cplx spatial = 0;
  for (size_t j = 0; j < qs.size(); ++j) {
    GroupElement x = disc_section(qs.z[j]);
    cplx hv = h(x);
    if (hv == 0.0) continue;
    spatial += qs.w[j] * T.synthesize(vf, x) * std::conj(hv);
  }
  Spectrum wh = fourier_delta(h, DiscQuadrature::make(radius, nt_spec, na_spec, center), T.spectral(), T.boundary());
  cplx spectral = 0;
  const auto& sg = T.spectral();
  for (size_t k = 0; k < sg.size(); ++k) {
    cplx inner = 0;
    for (size_t ib = 0; ib < vf.nb; ++ib) inner += vf.at(ib, k) * std::conj(wh.at(ib, k));
    spectral += sg.w[k] * T.multiplier()(sg.tau[k]) * inner / double(vf.nb);
  }
  double rel = std::abs(spatial - spectral) / std::max(std::abs(spectral), 1e-300);
  return {spatial.real(), spatial.imag(), spectral.real(), spectral.imag(), rel};
}

SchurResult schur_check(int n, const SpectralGrid& sg, const BoundaryGrid& bg, int nt, int na) {
  const double kw = 1.5;  // kernel support radius
  auto kernel = [n, kw](const GroupElement& g) -> cplx {
    CartanCoords c = cartan_coords(g, 1e-8);
    double th = std::tanh(0.5 * c.t);
    double k = std::pow(th, 2 * std::abs(n)) * bump1(c.t / kw) * (1 + 0.5 * c.t);
    if (k == 0) return 0.0;
    return k * std::exp(kI * (2.0 * n * c.psi));
  };
  struct Input {
    cplx center;
    double radius;
  };
  const Input inputs[2] = {{cplx(0.3, 0.2), 1.2}, {cplx(-0.25, 0.35), 1.0}};

  std::vector<Spectrum> F, V;
  for (const auto& in : inputs) {
    auto f = [in](cplx z) { return bump1(hyperbolic_distance(z, in.center) / in.radius) * (1 + 0.3 * z.real()); };
    DiscQuadrature qf = DiscQuadrature::make(in.radius, nt, na, in.center);
    std::vector<GroupElement> ys;
    std::vector<cplx> fy;
    for (size_t j = 0; j < qf.size(); ++j) {
      cplx v = f(qf.z[j]);
      if (v == 0.0) continue;
      ys.push_back(disc_section(qf.z[j]).inverse());
      fy.push_back(qf.w[j] * v);
    }
    V.push_back(fourier_delta([&] {
      std::vector<cplx> vals(qf.size());
      for (size_t j = 0; j < qf.size(); ++j) vals[j] = f(qf.z[j]);
      return vals;
    }(), 0, qf, sg, bg));
    // T_c f(x) = int f(y) kappa(x(y)^{-1} x) dmu(y), supported within radius + kw of the centre
    DiscQuadrature qo = DiscQuadrature::make(in.radius + kw, 2 * nt, 2 * na, in.center);
    std::vector<cplx> tc(qo.size());
    for (size_t j = 0; j < qo.size(); ++j) {
      GroupElement x = disc_section(qo.z[j]);
      cplx acc = 0;
      for (size_t i = 0; i < ys.size(); ++i) acc += fy[i] * kernel(ys[i] * x);
      tc[j] = acc;
    }
    F.push_back(fourier_delta(tc, n, qo, sg, bg));
  }

  SchurResult r;
  double num = 0, den = 0, num2 = 0, den2 = 0;
  for (size_t k = 0; k < sg.size(); ++k) {
    cplx fv = 0;
    double vv = 0;
    for (size_t ib = 0; ib < bg.size(); ++ib) {
      fv += F[0].at(ib, k) * std::conj(V[0].at(ib, k));
      vv += std::norm(V[0].at(ib, k));
    }
    cplx m = vv > 0 ? fv / vv : 0.0;
    r.m.push_back(m);
    for (size_t ib = 0; ib < bg.size(); ++ib) {
      num += sg.w[k] * std::norm(F[0].at(ib, k) - m * V[0].at(ib, k));
      den += sg.w[k] * std::norm(F[0].at(ib, k));
      num2 += sg.w[k] * std::norm(F[1].at(ib, k) - m * V[1].at(ib, k));
      den2 += sg.w[k] * std::norm(F[1].at(ib, k));
    }
  }
  r.leakage = std::sqrt(num / den);
  r.cross_input = std::sqrt(num2 / den2);
  return r;
}

GrowthResult norm_growth(const Multiplier& M, const std::vector<double>& tau_maxes, int n_probes) {
  std::vector<RadialFunction> probes;
  for (int i = 0; i < n_probes; ++i) {
    double om = 3.0 * i;
    RadialFunction f = bump_profile(0, 2.5);
    auto base = f.profile;
    f.profile = [base, om](double t) { return base(t) * std::cos(om * t); };
    probes.push_back(f);
  }
  const int P = n_probes;
  Eigen::MatrixXd B(P, P);
  Rule1D rt = radial_rule(2.5, 24, 16);
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j) {
      double acc = 0;
      for (size_t q = 0; q < rt.x.size(); ++q) acc += rt.w[q] * probes[i](rt.x[q]) * probes[j](rt.x[q]) * std::sinh(rt.x[q]);
      B(i, j) = kHaarC0 * acc;
    }
  GrowthResult res;
  double tprev = 0;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(P, P);
  std::vector<double> sorted = tau_maxes;
  std::sort(sorted.begin(), sorted.end());
  for (double tm : sorted) {
    int panels = std::max(1, static_cast<int>(std::ceil(tm - tprev)));
    SpectralGrid sg = SpectralGrid::make(tm - tprev, panels, 16);
    std::vector<cplx> svals;
    for (double& t : sg.tau) {
      t += tprev;
      svals.push_back(cplx(0.5, t));
    }
    auto fh = spherical_transform_batch(probes, svals, 16);
    for (size_t k = 0; k < sg.size(); ++k) {
      double tau = sg.tau[k];
      double w = (sg.w[k] / ((tau - tprev) * std::tanh(kPi * (tau - tprev)))) * tau * std::tanh(kPi * tau);
      double m2 = std::norm(M(tau));
      for (int i = 0; i < P; ++i)
        for (int j = 0; j < P; ++j) A(i, j) += w * m2 * (fh[i][k] * std::conj(fh[j][k])).real();
    }
    tprev = tm;
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B);
    res.tau_max.push_back(tm);
    res.lambda_max.push_back(es.eigenvalues().maxCoeff());
  }
  res.monotone = true;
  for (size_t i = 1; i < res.lambda_max.size(); ++i)
    res.monotone = res.monotone && res.lambda_max[i] > res.lambda_max[i - 1] * (1 + 1e-6);
  return res;
}

IsometryResult partial_isometry(const DeltaSection& f, int n, double R, int nt, int na, const SpectralGrid& sg,
                                const BoundaryGrid& bg) {
  DiscQuadrature q = DiscQuadrature::make(R, nt, na);
  std::vector<cplx> vals(q.size());
  double spatial = 0;
  for (size_t j = 0; j < q.size(); ++j) {
    vals[j] = f(disc_section(q.z[j]));
    spatial += q.w[j] * std::norm(vals[j]);
  }
  Spectrum v = fourier_delta(vals, n, q, sg, bg);
  double spectral = 0;
  for (size_t k = 0; k < sg.size(); ++k) {
    double s = 0;
    for (size_t ib = 0; ib < bg.size(); ++ib) s += std::norm(v.at(ib, k));
    spectral += sg.w[k] * s / double(bg.size());
  }
  return {spectral, spatial, spectral / spatial};
}

MoyalChain::MoyalChain(int ell, Multiplier M, SpectralGrid sg, BoundaryGrid bg, Orbit branch)
    : ell_(ell), branch_(branch), T_(std::move(M), branch == Orbit::O2 ? ell / 2 : -ell / 2, std::move(sg), std::move(bg)) {
  if (ell == 0) throw std::domain_error("compose_to_moyal: ell must be nonzero");
  if (ell % 2 != 0)
    throw std::domain_error(
        "compose_to_moyal: odd ell has central character -1 on the Moyal side, L2(G/K) has +1; "
        "the only intertwiner is zero");
  if (branch == Orbit::O3) throw std::invalid_argument("compose_to_moyal: branch must be O1 or O2");
}

MoyalChain::MoyalChain(int ell, int n, Multiplier M, SpectralGrid sg, BoundaryGrid bg, Orbit branch)
    : ell_(ell), branch_(branch), T_(std::move(M), n, std::move(sg), std::move(bg)) {
  if (ell == 0) throw std::domain_error("MoyalChain: ell must be nonzero");
  if (branch == Orbit::O3) throw std::invalid_argument("MoyalChain: branch must be O1 or O2");
}

MoyalChain MoyalChain::with_type(int ell, int n, Multiplier M, SpectralGrid sg, BoundaryGrid bg, Orbit branch) {
  return MoyalChain(ell, n, std::move(M), std::move(sg), std::move(bg), branch);
}

GroupElement MoyalChain::section_at(double l, double eta, bool* on_orbit) const {
  cplx z(l, nu() * eta);
  GroupElement C = cayley_element();
  Vec2 w = C.apply({z, 1.0});
  Vec2 s = normalize(w);
  if (branch_ == Orbit::O2) std::swap(s[0], s[1]);
  double br = bracket_form(s, s).real();
  *on_orbit = br > 0;
  if (br <= 0) return GroupElement::identity();
  double r = std::sqrt(br);
  GroupElement x{s[0] / r, std::conj(s[1]) / r, s[1] / r, std::conj(s[0]) / r};
  if (branch_ == Orbit::O2) x = {std::conj(x.a), std::conj(x.b), std::conj(x.c), std::conj(x.d)};
  return x;
}

double MoyalChain::distance(double l, double eta) const {
  bool on = false;
  GroupElement x = section_at(l, eta, &on);
  if (!on) return std::numeric_limits<double>::infinity();
  return 2 * std::asinh(std::abs(x.b));
}

cplx MoyalChain::value(const Spectrum& v, double l, double eta) const {
  cplx z(l, nu() * eta);
  Vec2 w = cayley_element().apply({z, 1.0});
  double nr2 = std::norm(w[0]) + std::norm(w[1]);
  bool on = false;
  GroupElement x = section_at(l, eta, &on);
  if (!on) return 0.0;
  Vec2 s = normalize(w);
  double br = std::abs(bracket_form(s, s).real());
  // phi = [s,s]^{mu/2} psi with mu = -2, then the Cayley chart weight |C(z,1)|^{-2}
  return T_.synthesize(v, x) / (br * nr2);
}

GridFunction compose_to_moyal(const RadialFunction& f, int ell, int N, double half_width, double t_cut,
                              const SpectralGrid& sg, const BoundaryGrid& bg, Orbit branch) {
  MoyalChain chain(ell, Multiplier::constant(), sg, bg, branch);
  Spectrum v = radial_spectrum(f, sg, bg);
  Axis al{N, -half_width, 2 * half_width / N, L};
  GridFunction uh(al, dual_eta_axis(N, half_width));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double l = uh.ax.at(i), eta = uh.ay.at(j);
      if (chain.distance(l, eta) > t_cut) continue;
      uh(i, j) = chain.value(v, l, eta);
    }
  return inverse_partial_fourier_grid(uh);
}

std::vector<ChainEquivariance> chain_equivariance(const MoyalChain& chain, const RadialFunction& f, int N,
                                                  double half_width, double t_cut, int nt, int na, double R) {
  const auto& T = chain.T();
  Spectrum v0 = radial_spectrum(f, T.spectral(), T.boundary());
  Axis al{N, -half_width, 2 * half_width / N, L};
  Axis ae = dual_eta_axis(N, half_width);
  const double h = 1e-4, dt = 1e-4, nu = chain.nu();

  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (chain.distance(al.at(i), ae.at(j)) <= t_cut) pts.push_back({i, j});

  // values and first derivatives of f_R at the samples
  std::vector<cplx> f0(pts.size()), fl(pts.size()), fe(pts.size());
  for (size_t p = 0; p < pts.size(); ++p) {
    double l = al.at(pts[p].first), e = ae.at(pts[p].second);
    f0[p] = chain.value(v0, l, e);
    fl[p] = (chain.value(v0, l + h, e) - chain.value(v0, l - h, e)) / (2 * h);
    fe[p] = (chain.value(v0, l, e + h) - chain.value(v0, l, e - h)) / (2 * h);
  }

  const LieElement gens[3] = {LieElement::E(), LieElement::H(), LieElement::F()};
  const char* names[3] = {"E", "H", "F"};
  DiscQuadrature q = DiscQuadrature::make(R, nt, na);
  GroupElement C = cayley_element();
  std::vector<ChainEquivariance> out;
  for (int gi = 0; gi < 3; ++gi) {
    DiffOp rho = rho_hat(gens[gi]);
    Spectrum vpm[2];
    for (int sgn = 0; sgn < 2; ++sgn) {
      GroupElement g = C * GroupElement::exp(gens[gi], sgn == 0 ? dt : -dt) * C.inverse();
      GroupElement ginv = g.inverse();
      vpm[sgn] = helgason_transform([&](cplx z) { return cplx(f(hyperbolic_distance(ginv.mobius(z), 0.0))); }, q,
                                    T.spectral(), T.boundary());
    }
    GridFunction lhs(al, ae), rhs(al, ae);
    for (size_t p = 0; p < pts.size(); ++p) {
      double l = al.at(pts[p].first), e = ae.at(pts[p].second);
      cplx acc = 0;
      for (const auto& [a, c] : rho.terms()) {
        if (a[1] != 0 || a[0] + a[2] > 1) throw std::logic_error("chain_equivariance: rho_hat must be first order in (l, eta)");
        cplx coef = c.eval(l, 0, e, nu);
        acc += coef * (a[0] == 1 ? fl[p] : a[2] == 1 ? fe[p] : f0[p]);
      }
      lhs(pts[p].first, pts[p].second) = acc;
      rhs(pts[p].first, pts[p].second) = -(chain.value(vpm[0], l, e) - chain.value(vpm[1], l, e)) / (2 * dt);
    }
    ChainEquivariance r;
    r.generator = names[gi];
    r.samples = static_cast<int>(pts.size());
    r.residual_eta = relative_l2(rhs, lhs);
    r.residual_lp = relative_l2(inverse_partial_fourier_grid(rhs), inverse_partial_fourier_grid(lhs));
    out.push_back(r);
  }
  return out;
}

GramResult gram_injectivity(const std::vector<GridFunction>& images) {
  const int n = static_cast<int>(images.size());
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx acc = 0;
      for (size_t k = 0; k < images[i].v.size(); ++k) acc += images[i].v[k] * std::conj(images[j].v[k]);
      G(i, j) = acc * images[i].ax.dx * images[i].ay.dx;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
  GramResult r;
  for (int i = 0; i < n; ++i) r.eigenvalues.push_back(es.eigenvalues()(i));
  double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  r.condition = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
  return r;
}

cplx central_character(int ell) {
  LieElement W = LieElement::E() - LieElement::F();
  // fixed point z = i of the rotation flow: l = 0, nu eta = 1
  double nu = 1.0 / ell;
  cplx m = rho_multiplier(W).eval(0, 0, 1 / nu, nu);
  return std::exp(kPi * m);
}

}  // namespace sl2q
