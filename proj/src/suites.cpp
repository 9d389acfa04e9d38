#include "sl2q/suites.hpp"

#include "sl2q/fourier_symbols.hpp"
#include "sl2q/grid.hpp"
#include "sl2q/harmonic_disc.hpp"
#include "sl2q/intertwiner.hpp"
#include "sl2q/moyal.hpp"
#include "sl2q/principal_series.hpp"
#include "sl2q/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sl2q {

namespace {

const cplx kI(0, 1);
const LieElement kBasis[3] = {LieElement::E(), LieElement::H(), LieElement::F()};
const char* kNames[3] = {"E", "H", "F"};

class Timer {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - t0_).count();
    t0_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct Builder {
  explicit Builder(std::string s) : suite(std::move(s)) {}
  std::string suite;
  Report rep;
  Timer timer;
  // pass iff residual <= tol
  void add(const std::string& check, double residual, double tol, std::string note = "") {
    rep.add({suite, check, residual, tol, residual <= tol, timer.lap(), std::move(note)});
  }
  void add_flag(const std::string& check, bool ok, std::string note = "") {
    rep.add({suite, check, ok ? 0.0 : 1.0, 0.0, ok, timer.lap(), std::move(note)});
  }
};

double term_count(const Polynomial& p) { return static_cast<double>(p.terms().size()); }
double term_count(const DiffOp& d) {
  double n = 0;
  for (const auto& [a, c] : d.terms()) n += static_cast<double>(c.terms().size());
  return n;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

Report suite_covariance(const SuiteConfig&) {
  Builder b("covariance");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      b.add(std::string("[") + kNames[i] + "," + kNames[j] + "]", term_count(covariance_residual(kBasis[i], kBasis[j])), 0);
  return b.rep;
}

Report suite_property_b(const SuiteConfig& cfg) {
  Builder b("propertyB");
  for (int x = 0; x < 3; ++x) {
    int bad = 0;
    Rng r2(cfg.seed + 17);
    for (int i = 0; i < 100; ++i) {
      Polynomial u = random_poly(r2, 8, 8);
      if (property_B(kBasis[x], u) > 3) ++bad;
    }
    b.add(std::string("c_k(lambda_") + kNames[x] + ",u)=0 for k>3 on 100 random u", bad, 0);
  }
  const Polynomial lp = Polynomial::var(LP), l = Polynomial::var(L);
  b.add("witness N(F, l l'^2) = 3", std::abs(property_B(LieElement::F(), l * lp * lp) - 3), 0);
  b.add("N(F, l'^5) = 2", std::abs(property_B(LieElement::F(), lp * lp * lp * lp * lp) - 2), 0);
  return b.rep;
}

Report suite_prop34(const SuiteConfig&) {
  Builder b("prop34");
  b.add("kernel calibration on E (kappa = -1)", term_count(verify_prop34(LieElement::E(), true)), 0);
  for (int x = 0; x < 3; ++x) {
    b.add(std::string("left identity ") + kNames[x], term_count(verify_prop34(kBasis[x], true)), 0);
    b.add(std::string("right identity ") + kNames[x], term_count(verify_prop34(kBasis[x], false)), 0);
    DiffOp sym = fourier_conjugate(ad_star_as_diffop(kBasis[x]));
    b.add(std::string("F ad(") + kNames[x] + ") = m + Y", term_count(sym - (DiffOp::mult(rho_multiplier(kBasis[x])) + Y_field(kBasis[x]))), 0);
  }
  return b.rep;
}

Report suite_thm42(const SuiteConfig&) {
  Builder b("thm42");
  const Polynomial inv_nu = nu_(-1);
  for (int x = 0; x < 3; ++x) {
    b.add(std::string("rho_display(") + kNames[x] + ") = dP^{-2,1/nu}",
          term_count(rho_hat_display(kBasis[x]) - dP_infinitesimal(kBasis[x], GQ(-2), inv_nu)), 0);
    b.add(std::string("rho(") + kNames[x] + ") = dP^{-2,-1/nu} (calibrated kernel)",
          term_count(rho_hat(kBasis[x]) - dP_infinitesimal(kBasis[x], GQ(-2), -inv_nu)), 0);
  }
  const int s = lie_action_sign();
  double worst = 0, worst_d = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, term_count(commutator(rho_hat(kBasis[i]), rho_hat(kBasis[j])) -
                                         Polynomial(GQ(s)) * rho_hat(bracket(kBasis[i], kBasis[j]))));
      worst_d = std::max(worst_d, term_count(commutator(rho_hat_display(kBasis[i]), rho_hat_display(kBasis[j])) -
                                             Polynomial(GQ(s)) * rho_hat_display(bracket(kBasis[i], kBasis[j]))));
    }
  b.add("[rho(X), rho(Y)] = s rho([X,Y]), s = " + std::to_string(s), worst, 0);
  b.add("[rho_display(X), rho_display(Y)] = s rho_display([X,Y])", worst_d, 0);
  return b.rep;
}

std::vector<GaussianType> gaussian_family() {
  const Polynomial l = Polynomial::var(L), lp = Polynomial::var(LP);
  std::vector<GaussianType> us;
  for (int i = 0; i < 10; ++i) {
    GQ a = GQ::frac(2 + 3 * i, 2), bb = GQ::frac(2 + 3 * ((i * 7) % 10), 2);
    Polynomial c0(GQ::frac(i % 3, 4)), c1(GQ::frac(-(i % 2), 2));
    Polynomial g = -(a * (l - c0) * (l - c0)) - (bb * (lp - c1) * (lp - c1));
    Polynomial P = Polynomial(1) + GQ::frac(i, 3) * l * lp + GQ(mpq_class(1, 2), mpq_class(i % 2)) * lp * lp * lp;
    us.push_back({P, g});
  }
  return us;
}

double grid_residual(const std::vector<GaussianType>& us, int N, double half_width, double nu) {
  GridFunction g0 = make_grid(N, half_width);
  double worst = 0;
  for (const auto& u : us)
    for (const auto& X : kBasis) {
      GridFunction uh = partial_fourier_grid(u.sample(g0.ax, g0.ay, nu));
      GridFunction vh = partial_fourier_grid(u.apply(ad_star_as_diffop(X)).sample(g0.ax, g0.ay, nu));
      worst = std::max(worst, relative_l2(apply_diffop_grid(rho_hat(X), uh, nu), vh));
    }
  return worst;
}

Report suite_grid(const SuiteConfig& cfg) {
  Builder b("grid");
  double nu = parse_rational(cfg.nu).re.get_d();
  auto us = gaussian_family();
  std::vector<int> ns = {cfg.grid_n / 4, cfg.grid_n / 2, cfg.grid_n};
  std::vector<double> rs;
  std::string ladder;
  for (int N : ns) {
    rs.push_back(grid_residual(us, N, cfg.half_width, nu));
    ladder += (ladder.empty() ? "" : ", ") + std::string("N=") + std::to_string(N) + ": " + fmt(rs.back());
  }
  b.add("transported ad vs rho_hat, 10 gaussians, N=" + std::to_string(cfg.grid_n) + " L=" + fmt(cfg.half_width),
        rs.back(), 1e-6, ladder);
  bool dec = rs[1] < rs[0] && rs[2] < rs[1];
  b.add_flag("residual decreases under N doubling", dec, ladder);
  return b.rep;
}

struct Sampler {
  std::mt19937_64 rng;
  std::normal_distribution<double> nd{0, 1};
  explicit Sampler(uint64_t seed) : rng(seed) {}
  cplx c(double s = 1) { return s * cplx(nd(rng), nd(rng)); }
  GroupElement sl2c(double s = 0.5) { return GroupElement::exp(c(s), c(s), c(s)); }
  GroupElement su11(double s) {
    double t = s * std::abs(nd(rng));
    return GroupElement::su11(std::exp(kI * nd(rng)), 0.0) * GroupElement::su11(std::cosh(t), std::sinh(t) * std::exp(kI * nd(rng)));
  }
  Vec2 unit() { return normalize({c(), c()}); }
};

cplx plane_bump(cplx z) {
  double r = std::norm(z - cplx(0.3, -0.2));
  return r < 2 ? std::exp(1 - 1 / (1 - r * r / 4)) * (1.0 + 0.5 * z) : 0.0;
}

Report suite_principal(const SuiteConfig& cfg) {
  Builder b("principal");
  Sampler S(cfg.seed);
  double worst_n = 0, worst_c = 0;
  int flagged = 0;
  SphereFunction phi = homogeneous_bump({0.6, 0.8}, 0.2, 2);
  for (int i = 0; i < 100; ++i) {
    GroupElement g1 = S.sl2c(), g2 = S.sl2c();
    cplx mu = S.c(), z = S.c();
    int ell = static_cast<int>(S.rng() % 7) - 3;
    cplx lhs = act_noncompact(g1 * g2, mu, ell, plane_bump)(z);
    cplx rhs = act_noncompact(g1, mu, ell, act_noncompact(g2, mu, ell, plane_bump))(z);
    if (std::isnan(lhs.real()) || std::isnan(rhs.real())) {
      ++flagged;
    } else {
      worst_n = std::max(worst_n, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    Vec2 s = S.unit();
    cplx v = act_compact(g1 * g2, mu, phi)(s);
    worst_c = std::max(worst_c, std::abs(v - act_compact(g1, mu, act_compact(g2, mu, phi))(s)) / std::max(1.0, std::abs(v)));
  }
  b.add("cocycle, noncompact picture, 100 random triples", worst_n, 1e-10,
        flagged ? std::to_string(flagged) + " pole samples excluded" : "");
  b.add("cocycle, compact picture, 100 random triples", worst_c, 1e-10);

  SphereFunction f = homogeneous_bump({0.6, cplx(0.3, 0.74)}, 0.3, 1);
  GroupElement g = GroupElement::exp(cplx(0.3, 0.1), cplx(0.2, -0.2), cplx(-0.1, 0.25));
  auto Pf = act_compact(g, cplx(-2, 0.8), f);
  auto sq = [](const SphereFunction& u) { return [u](const Vec2& s) { return cplx(std::norm(u(s))); }; };
  std::vector<double> rel;
  std::string ladder;
  for (int r : {1, 2}) {
    CP1Quadrature q = CP1Quadrature::make(16 * r, 16, 128 * r);
    rel.push_back(std::abs(q.integrate(sq(Pf)).real() / q.integrate(sq(f)).real() - 1));
    ladder += (ladder.empty() ? "" : ", ") + fmt(rel.back());
  }
  b.add("unitarity at mu = -2 + 0.8i (finest quadrature)", rel.back(), 1e-6, "refinement: " + ladder);
  return b.rep;
}

Report suite_amap(const SuiteConfig& cfg) {
  Builder b("amap");
  Sampler S(cfg.seed + 1);
  const cplx mu(-2, 0.6);
  SphereFunction phi = homogeneous_bump({1.0, 0.2}, 0.75, 2);
  auto psi = map_A(phi, mu);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    GroupElement g = S.su11(0.4);
    Vec2 s = S.unit();
    if (orbit_classify(s) != Orbit::O1) s = {s[1], s[0]};
    cplx lhs = psi(normalize(g.inverse().apply(s)));
    cplx rhs = act_compact(g, mu, phi)(s) * std::exp(-0.5 * mu * std::log(bracket_form(s, s).real()));
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  b.add("intertwining psi(g^-1 s) = P(g)phi(s)[s,s]^(-mu/2), 100 random (g,s)", worst, 1e-10);

  // norm identity at mu = -2 with the invariant measure ds/[s,s]^2, for phi and a translate
  GroupElement g = GroupElement::su11(cplx(1.1, 0.2), cplx(0.3, 0.2));
  auto weighted = [](const SphereFunction& u) {
    return [u](const Vec2& s) {
      double q = bracket_form(s, s).real();
      cplx v = u(s);
      return v == 0.0 ? cplx(0) : cplx(std::norm(v) / (q * q));
    };
  };
  CP1Quadrature q = CP1Quadrature::make(32, 16, 256);
  double rhs = q.integrate([&](const Vec2& s) { return cplx(std::norm(phi(s))); }).real();
  double lhs = q.integrate(weighted(map_A(phi, -2.0))).real();
  double lhs_g = q.integrate(weighted(map_A(act_compact(g, -2.0, phi), -2.0))).real();
  b.add("norm identity at mu = -2", std::abs(lhs / rhs - 1), 1e-6);
  b.add("norm identity at mu = -2 after an SU(1,1) translate", std::abs(lhs_g / rhs - 1), 1e-6);

  bool rejected = false;
  try {
    map_A(homogeneous_bump({1.0, 0.0}, 0.2, 0), mu)(normalize({1.0, 1.0 - 1e-8}));
  } catch (const std::domain_error&) {
    rejected = true;
  }
  b.add_flag("support touching the null cone is rejected", rejected);
  return b.rep;
}

Report suite_spherical(const SuiteConfig&) {
  Builder b("spherical");
  for (double tau : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    double worst = 0;
    for (int k = 1; k <= 20; ++k) {
      double t = 0.25 * k;
      cplx s(0.5, tau);
      cplx z = spherical_zeta(0, s, t), o = harish_chandra_zeta(s, t);
      worst = std::max(worst, std::abs(z - o) / std::abs(o));
    }
    b.add("zeta_{0,1/2+i" + fmt(tau) + "} vs Harish-Chandra integral, t in (0,5]", worst, 1e-8);
  }
  double worst0 = 0;
  for (int n = -3; n <= 3; ++n)
    for (cplx s : {cplx(0.5, 0.3), cplx(0.5, 7), cplx(1), cplx(2), cplx(0.2, -1.5)})
      worst0 = std::max(worst0, std::abs(spherical_zeta(n, s, 0.0) - 1.0));
  b.add("zeta_{n,s}(a_0) = 1", worst0, 0);
  return b.rep;
}

std::vector<RadialFunction> plancherel_profiles(int n) {
  return {bump_profile(0, 2.0, 0.3, n), bump_profile(1.5, 1.0, 0, n), bump_profile(2.0, 1.5, 0.1, n),
          bump_profile(1.0, 0.8, 0, n), bump_profile(3.0, 1.2, 0.2, n)};
}

Report suite_plancherel(const SuiteConfig& cfg) {
  Builder b("plancherel");
  for (int n : {0, 2}) {
    auto fs = plancherel_profiles(n);
    auto rs = plancherel_batch(fs);
    for (size_t i = 0; i < rs.size(); ++i) {
      const auto& r = rs[i];
      std::string note = "tau_max " + fmt(r.tau_max);
      if (n != 0) note += "; printed grouping ratio " + fmt(r.printed_grouping / r.spatial);
      b.add("l=" + std::to_string(n) + " " + fs[i].name, std::abs(r.spectral / r.spatial - 1), 1e-3, note);
    }
    if (!cfg.spectrum_csv.empty() && n == 2) write_spectrum_csv(cfg.spectrum_csv, rs[0]);
  }
  return b.rep;
}

Report suite_thm51(const SuiteConfig& cfg) {
  Builder b("thm51");
  SpectralGrid sg = SpectralGrid::make(cfg.tau_max, static_cast<int>(std::ceil(cfg.tau_max)), 16);
  BoundaryGrid bg = BoundaryGrid::make(cfg.boundary);
  RadialFunction f = bump_profile(0, 1.5);
  Spectrum vf = radial_spectrum(f, sg, bg);

  for (const auto& M : {Multiplier::constant(), Multiplier::lorentzian()})
    for (int n : {0, 1}) {
      Intertwiner T(M, n, sg, bg);
      auto w = weak_spectral_consistency(T, vf, cplx(0.2, 0.1), 1.0, 32, 48, 40, 60);
      b.add("F_delta(Tf) = M F_1 f, weak form, M=" + M.name + " n=" + std::to_string(n), w.relative, 1e-6);
    }

  {
    DiscQuadrature q = DiscQuadrature::make(f.t_max, 48, 96);
    Spectrum direct = fourier_delta(bi_equivariant_section(f), q, sg, bg);
    double worst = 0;
    for (size_t k = 0; k < sg.size(); ++k)
      for (size_t ib = 0; ib < bg.size(); ++ib)
        worst = std::max(worst, std::abs(direct.at(ib, k) - vf.at(ib, k)) / std::abs(vf.at(0, 0)));
    b.add("F_delta on l=0 input agrees with the spherical transform", worst, 1e-8);
  }

  Intertwiner T(Multiplier::constant(), 0, sg, bg);
  auto xs = sample_points(20, 2.0, cfg.seed);
  std::vector<double> rs;
  std::string ladder;
  for (auto [nt, na] : {std::pair{12, 24}, std::pair{24, 48}, std::pair{48, 96}}) {
    rs.push_back(check_equivariance(T, a_t(0.3), f, nt, na, xs).residual);
    ladder += (ladder.empty() ? "" : ", ") + std::to_string(nt) + "x" + std::to_string(na) + ": " + fmt(rs.back());
  }
  b.add("equivariance T(L_g f) = L_g(Tf), g = a_0.3", rs.back(), 1e-2, ladder);
  b.add_flag("equivariance residual strictly decreasing under refinement", rs[1] < rs[0] && rs[2] < rs[1], ladder);

  {
    BoundaryGrid bk = BoundaryGrid::make(std::max(128, 2 * cfg.boundary));
    Intertwiner Tk(Multiplier::lorentzian(), 1, sg, bk);
    auto h = [](cplx z) {
      double d = hyperbolic_distance(z, cplx(0.2, 0.1)) / 1.2;
      return d < 1 ? std::exp(1 - 1 / (1 - d * d)) * (1.0 + z.real()) : 0.0;
    };
    b.add("equivariance for g in K (non-radial input)", check_equivariance(Tk, k_phi(0.7), h, 1.6, 64, 128, xs).residual, 1e-8);
    b.add("K-equivariance of Tf", k_equivariance_residual(T.apply(vf), xs, {0.3, 1.1, 2.9}), 1e-10);
  }

  const double quad_tol = 1e-4;
  SpectralGrid sgs = SpectralGrid::make(10, 10, 12);
  BoundaryGrid bgs = BoundaryGrid::make(32);
  for (int n : {0, 1, -2}) {
    auto r = schur_check(n, sgs, bgs, 24, 48);
    b.add("Schur leakage, convolution intertwiner n=" + std::to_string(n), r.leakage, quad_tol);
    b.add("Schur multiplier independent of the input, n=" + std::to_string(n), r.cross_input, quad_tol);
  }

  auto gl = norm_growth(Multiplier::linear(), {5, 10, 20});
  std::string gnote;
  for (size_t i = 0; i < gl.tau_max.size(); ++i)
    gnote += (gnote.empty() ? "" : ", ") + std::string("tau<=") + fmt(gl.tau_max[i]) + ": " + fmt(gl.lambda_max[i]);
  b.add_flag("norm growth of truncated T for M = tau is monotone", gl.monotone, gnote);
  auto gb = norm_growth(Multiplier::lorentzian(), {5, 10, 20});
  b.add("bounded M: truncated norm saturates", std::abs(gb.lambda_max[2] / gb.lambda_max[1] - 1), 1e-3);

  auto iso = partial_isometry(bi_equivariant_section(f), 0, f.t_max, 48, 96, SpectralGrid::make(30, 30, 16), bg);
  b.add("partial isometry on l=0", std::abs(iso.ratio - 1), 1e-3);
  return b.rep;
}

Report suite_thm52(const SuiteConfig& cfg) {
  Builder b("thm52");
  const int ell = cfg.ell;
  cplx cc = central_character(ell);
  std::string ccnote = "central character exp(pi rho(E-F)) at z=i: " + fmt(cc.real()) + (cc.imag() >= 0 ? "+" : "") +
                       fmt(cc.imag()) + "i";
  Orbit br = cfg.branch == "O2" ? Orbit::O2 : Orbit::O1;
  SpectralGrid sg = SpectralGrid::make(15, 15, 16);
  BoundaryGrid bg = BoundaryGrid::make(128);
  std::string tag = "ell=" + std::to_string(ell) + " (nu=1/" + std::to_string(ell) + ")";
  try {
    MoyalChain chain(ell, Multiplier::constant(), sg, bg, br);
    auto eq = chain_equivariance(chain, bump_profile(0, 1.5), 32, 4.0, 2.0, 48, 96, 2.0);
    for (const auto& e : eq)
      b.add("infinitesimal equivariance " + e.generator + ", " + tag, e.residual_lp, 1e-2,
            std::to_string(e.samples) + " samples; " + ccnote);
    std::vector<GridFunction> images;
    for (int i = 0; i < 8; ++i)
      images.push_back(compose_to_moyal(bump_profile(0.2 * i, 0.8 + 0.1 * i, 0.1 * i), ell, 32, 4.0, 3.0, sg, bg, br));
    auto g = gram_injectivity(images);
    b.add("Gram condition number of 8 bump images, " + tag, g.condition, 1e6);
  } catch (const std::domain_error& e) {
    // Odd ell: no section type matches. Run the chain with the two nearest integer types
    // and report the better one, so the failure is measured rather than asserted.
    struct Candidate {
      int n;
      std::vector<ChainEquivariance> eq;
      double worst = 0;
    };
    std::vector<Candidate> cands;
    for (int n : {-(ell - 1) / 2, -(ell + 1) / 2}) {
      Candidate c{n, chain_equivariance(MoyalChain::with_type(ell, n, Multiplier::constant(), sg, bg, br),
                                        bump_profile(0, 1.5), 32, 4.0, 2.0, 48, 96, 2.0)};
      for (const auto& r : c.eq) c.worst = std::max(c.worst, r.residual_lp);
      cands.push_back(c);
    }
    const Candidate& best = cands[0].worst <= cands[1].worst ? cands[0] : cands[1];
    std::string alt;
    for (const auto& c : cands) {
      alt += (alt.empty() ? "" : "; ") + std::string("n=") + std::to_string(c.n) + ":";
      for (const auto& r : c.eq) alt += " " + r.generator + " " + fmt(r.residual_lp);
    }
    std::string note = std::string(e.what()) + "; " + ccnote + "; nearest integer types " + alt;
    for (const auto& r : best.eq)
      b.add("infinitesimal equivariance " + r.generator + ", " + tag + ", section type n=" + std::to_string(best.n),
            r.residual_lp, 1e-2, note);
    std::vector<GridFunction> images;
    auto chain = MoyalChain::with_type(ell, best.n, Multiplier::constant(), sg, bg, br);
    for (int i = 0; i < 8; ++i) {
      RadialFunction f = bump_profile(0.2 * i, 0.8 + 0.1 * i, 0.1 * i);
      Spectrum v = radial_spectrum(f, sg, bg);
      Axis al{32, -4.0, 8.0 / 32, L};
      GridFunction uh(al, dual_eta_axis(32, 4.0));
      for (int a = 0; a < 32; ++a)
        for (int c = 0; c < 32; ++c)
          if (chain.distance(uh.ax.at(a), uh.ay.at(c)) <= 3.0) uh(a, c) = chain.value(v, uh.ax.at(a), uh.ay.at(c));
      images.push_back(inverse_partial_fourier_grid(uh));
    }
    auto g = gram_injectivity(images);
    b.add_flag("Gram condition number of 8 bump images, " + tag, false,
               "candidate map with n=" + std::to_string(best.n) + " has condition " + fmt(g.condition) +
                   " but is not an intertwiner; " + ccnote);
  }
  return b.rep;
}

Report suite_flows(const SuiteConfig& cfg) {
  Builder b("flows");
  const cplx z0(0.3, 0.5);
  auto fe = flow_trajectory(LieElement::E(), z0, 2.0, 0.1);
  double we = 0;
  for (const auto& p : fe.points) we = std::max(we, std::abs(p.z - (z0 + p.t)));
  b.add("E-flow z(t) = z0 + t", we, 1e-9);
  auto fh = flow_trajectory(LieElement::H(), cplx(0.7, 0.0), 2.0, 0.1);
  double wh = 0;
  for (const auto& p : fh.points) wh = std::max(wh, std::abs(std::arg(p.z)));
  b.add("H-flow preserves arg z on the real ray", wh, 1e-12);
  auto ff = flow_trajectory(LieElement::F(), kI, 5.0, 0.1);
  double wf = 0, minim = 1;
  for (const auto& p : ff.points) {
    wf = std::max(wf, std::abs(p.z - kI / (1.0 + kI * p.t)));
    minim = std::min(minim, p.z.imag());
  }
  b.add("F-flow from i follows the Moebius solution", wf, 1e-9);
  b.add_flag("F-flow from i stays in the upper half plane", minim > 0);
  auto blow = flow_trajectory(LieElement::F(), cplx(-1.0, 0.0), 3.0, 0.05);
  b.add_flag("F-flow from -1 is truncated at blow-up", blow.blew_up);
  if (!cfg.flow_csv.empty())
    write_flow_csv(cfg.flow_csv, {{"E", fe}, {"H", fh}, {"F", ff}, {"F", blow}});
  return b.rep;
}

using SuiteFn = Report (*)(const SuiteConfig&);
const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"covariance", suite_covariance}, {"propertyB", suite_property_b}, {"prop34", suite_prop34},
      {"thm42", suite_thm42},           {"grid", suite_grid},            {"principal", suite_principal},
      {"amap", suite_amap},             {"spherical", suite_spherical},  {"plancherel", suite_plancherel},
      {"thm51", suite_thm51},           {"thm52", suite_thm52},          {"flows", suite_flows}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"covariance", "propertyB", "prop34",     "thm42",
                                                 "grid",       "principal", "amap",       "spherical",
                                                 "plancherel", "thm51",     "thm52",      "flows"};
  return names;
}

void apply_config_file(const std::string& path, SuiteConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    try {
      if (k == "suite") cfg.suite = v;
      else if (k == "nu") cfg.nu = v;
      else if (k == "ell") cfg.ell = std::stoi(v);
      else if (k == "grid_n") cfg.grid_n = std::stoi(v);
      else if (k == "half_width") cfg.half_width = std::stod(v);
      else if (k == "tau_max") cfg.tau_max = std::stod(v);
      else if (k == "boundary") cfg.boundary = std::stoi(v);
      else if (k == "seed") cfg.seed = std::stoull(v);
      else if (k == "report") cfg.report = v;
      else if (k == "flow_csv") cfg.flow_csv = v;
      else if (k == "spectrum_csv") cfg.spectrum_csv = v;
      else if (k == "branch") cfg.branch = v;
      else if (k == "parallel") cfg.parallel = (v == "true" || v == "1");
      else if (k == "timing") cfg.timing = (v == "true" || v == "1");
      else throw std::invalid_argument("unknown key '" + k + "'");
    } catch (const std::logic_error& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void validate(const SuiteConfig& cfg) {
  if (cfg.suite != "all" && std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  if (GQ v = parse_rational(cfg.nu); v.im != 0 || v.re <= 0) throw std::invalid_argument("nu must be positive");
  if (cfg.ell == 0) throw std::invalid_argument("ell must be nonzero");
  if (cfg.grid_n < 16 || (cfg.grid_n & (cfg.grid_n - 1)) != 0) throw std::invalid_argument("grid_n must be a power of two >= 16");
  if (!(cfg.half_width > 0) || !(cfg.tau_max > 0)) throw std::invalid_argument("half_width and tau_max must be positive");
  if (cfg.boundary < 8) throw std::invalid_argument("boundary must be at least 8");
  if (cfg.branch != "O1" && cfg.branch != "O2") throw std::invalid_argument("branch must be O1 or O2");
}

Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<std::string> todo = cfg.suite == "all" ? suite_names() : std::vector<std::string>{cfg.suite};
  Report out;
  if (cfg.parallel && todo.size() > 1) {
    std::vector<std::future<Report>> fut;
    for (const auto& s : todo) {
      SuiteConfig c = cfg;
      c.suite = s;
      if (!c.flow_csv.empty() && s != "flows") c.flow_csv.clear();
      if (!c.spectrum_csv.empty() && s != "plancherel") c.spectrum_csv.clear();
      fut.push_back(std::async(std::launch::async, registry().at(s), c));
    }
    for (auto& f : fut) out.append(f.get());
  } else {
    for (const auto& s : todo) out.append(registry().at(s)(cfg));
  }
  if (!cfg.timing)
    for (auto& c : out.checks) c.seconds = 0;
  return out;
}

}  // namespace sl2q
