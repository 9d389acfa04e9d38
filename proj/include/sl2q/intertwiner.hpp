#pragma once

#include "sl2q/grid.hpp"
#include "sl2q/harmonic_disc.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sl2q {

// Principal line s = 1/2 + i tau with weights dmu = (1/2pi) tau tanh(pi tau) dtau.
struct SpectralGrid {
  std::vector<double> tau, w;
  static SpectralGrid make(double tau_max, int panels, int order);
  size_t size() const { return tau.size(); }
};

// Boundary circle b = e^{i th}, db = dth / 2pi.
struct BoundaryGrid {
  std::vector<cplx> b;
  static BoundaryGrid make(int nb);
  size_t size() const { return b.size(); }
};

// Nodes g_c(tanh(t/2) e^{i al}) with weights for dmu = sinh t dt dal (invariant measure).
struct DiscQuadrature {
  std::vector<cplx> z;
  std::vector<double> w;
  static DiscQuadrature make(double R, int nt, int na, cplx center = 0.0, int panels = 1);
  size_t size() const { return z.size(); }
};

// v(s)(b) sampled on (boundary, tau); layout [b][tau].
struct Spectrum {
  size_t nb = 0, ntau = 0;
  std::vector<cplx> v;
  cplx& at(size_t ib, size_t k) { return v[ib * ntau + k]; }
  const cplx& at(size_t ib, size_t k) const { return v[ib * ntau + k]; }
};

// Function on G with f(x k_ph) = e^{2 i n ph} f(x).
struct DeltaSection {
  int n = 0;
  std::function<cplx(const GroupElement&)> eval;
  cplx operator()(const GroupElement& x) const { return eval(x); }
};

struct Multiplier {
  std::string name;
  std::function<double(double)> m;
  double operator()(double tau) const { return m(tau); }
  double sup(const SpectralGrid& g) const;
  double inf_abs(const SpectralGrid& g) const;
  static Multiplier constant(double c = 1.0);
  static Multiplier lorentzian();  // 1 / (1 + tau^2)
  static Multiplier linear();      // tau (unbounded)
};

// int f(x(z)) P(z,b)^s (x(z)^{-1} b)^n dmu(z) from samples f(x(z)) at the disc nodes; n = 0 is 𝓕_1.
Spectrum fourier_delta(const std::vector<cplx>& values, int n, const DiscQuadrature& q, const SpectralGrid& sg,
                       const BoundaryGrid& bg);
Spectrum fourier_delta(const DeltaSection& f, const DiscQuadrature& q, const SpectralGrid& sg, const BoundaryGrid& bg);
Spectrum helgason_transform(const std::function<cplx(cplx)>& f, const DiscQuadrature& q, const SpectralGrid& sg,
                            const BoundaryGrid& bg);
// Radial type-0 input: v(s)(b) = f^(s), computed with the spherical transform.
Spectrum radial_spectrum(const RadialFunction& f, const SpectralGrid& sg, const BoundaryGrid& bg);

// <v(s), e_n> = int v(b) conj(b^n) db for each tau.
std::vector<cplx> k_type_component(const Spectrum& v, int n, const BoundaryGrid& bg);

// Section built from a profile: f(k_th a_t k_ps) = e^{2in(th+ps)} f(t).
DeltaSection bi_equivariant_section(const RadialFunction& f);

// Tf(x) = int dmu M(tau) int db v(b) conj(P(x0,b)^s (x^{-1}b)^n)
class Intertwiner {
 public:
  Intertwiner(Multiplier M, int n, SpectralGrid sg, BoundaryGrid bg);
  cplx synthesize(const Spectrum& v, const GroupElement& x) const;
  DeltaSection apply(Spectrum v) const;
  int n() const { return n_; }
  const SpectralGrid& spectral() const { return sg_; }
  const BoundaryGrid& boundary() const { return bg_; }
  const Multiplier& multiplier() const { return M_; }

 private:
  Multiplier M_;
  int n_;
  SpectralGrid sg_;
  BoundaryGrid bg_;
  std::vector<double> wm_;
};

// T f for an l = 0 radial input; warns (via `warnings`) if M vanishes somewhere on the grid.
DeltaSection build_T(const Intertwiner& T, const RadialFunction& f, std::vector<std::string>* warnings = nullptr);

// Relative l2 difference of two sections over sample points.
double section_residual(const DeltaSection& a, const DeltaSection& b, const std::vector<GroupElement>& xs);
// max |f(x k) - e^{2in ph} f(x)| / max |f(x)|
double k_equivariance_residual(const DeltaSection& f, const std::vector<GroupElement>& xs,
                               const std::vector<double>& phis);
std::vector<GroupElement> sample_points(int count, double t_max, uint64_t seed);

struct EquivarianceResult {
  double residual;
  int nt, na;
};
// T(L_g f) against L_g(T f) for a radial bump f; L_g f is analysed on a fixed disc grid (nt, na).
EquivarianceResult check_equivariance(const Intertwiner& T, const GroupElement& g, const RadialFunction& f, int nt,
                                      int na, const std::vector<GroupElement>& xs);
// General input supported in the disc of hyperbolic radius `support`; both f and L_g f use the same grid.
EquivarianceResult check_equivariance(const Intertwiner& T, const GroupElement& g, const std::function<cplx(cplx)>& f,
                                      double support, int nt, int na, const std::vector<GroupElement>& xs);

struct WeakConsistency {
  double spatial_re, spatial_im, spectral_re, spectral_im, relative;
};
// <Tf, h> computed on G/K against int dmu M <v^f, F_delta h>, h a bump section around `center`.
WeakConsistency weak_spectral_consistency(const Intertwiner& T, const Spectrum& vf, cplx center, double radius,
                                          int nt_spatial, int na_spatial, int nt_spec, int na_spec);
// h(x) = B(x0) (alpha/|alpha|)^{2n} with B a hyperbolic bump of the given radius.
DeltaSection bump_section(int n, cplx center, double radius);

struct SchurResult {
  double leakage;          // relative residual of F_delta(T_c f) - m(tau) v^f
  double cross_input;      // same multiplier m applied to a second input
  std::vector<cplx> m;     // fitted scalar per tau
};
// Right convolution by a left-K-invariant kernel of right type n vanishing like t^{2|n|} at 0.
SchurResult schur_check(int n, const SpectralGrid& sg, const BoundaryGrid& bg, int nt, int na);

struct GrowthResult {
  std::vector<double> tau_max, lambda_max;
  bool monotone;
};
// Largest generalized eigenvalue of ||T_{tau<=tau_max} f||^2 / ||f||^2 over a probe span.
GrowthResult norm_growth(const Multiplier& M, const std::vector<double>& tau_maxes, int n_probes = 8);

struct IsometryResult {
  double spectral, spatial, ratio;
};
IsometryResult partial_isometry(const DeltaSection& f, int n, double R, int nt, int na, const SpectralGrid& sg,
                                const BoundaryGrid& bg);

// Composite L2(G/K) -> Moyal-side space at nu = 1/ell (ell even, nonzero).
class MoyalChain {
 public:
  MoyalChain(int ell, Multiplier M, SpectralGrid sg, BoundaryGrid bg, Orbit branch = Orbit::O1);
  // Diagnostic: any section type n, bypassing the parity check (not an intertwiner unless 2|n| = |ell|).
  static MoyalChain with_type(int ell, int n, Multiplier M, SpectralGrid sg, BoundaryGrid bg, Orbit branch = Orbit::O1);
  int ell() const { return ell_; }
  double nu() const { return 1.0 / ell_; }
  const Intertwiner& T() const { return T_; }
  // f_R(l, eta) for the input with spectrum v; zero off the chosen orbit.
  cplx value(const Spectrum& v, double l, double eta) const;
  // hyperbolic distance of the sample from the base point (infinite off the orbit)
  double distance(double l, double eta) const;
  GroupElement section_at(double l, double eta, bool* on_orbit) const;

 private:
  MoyalChain(int ell, int n, Multiplier M, SpectralGrid sg, BoundaryGrid bg, Orbit branch);
  int ell_;
  Orbit branch_;
  Intertwiner T_;
};

// Throws std::domain_error for ell = 0 and for odd ell (central character mismatch).
GridFunction compose_to_moyal(const RadialFunction& f, int ell, int N, double half_width, double t_cut,
                              const SpectralGrid& sg, const BoundaryGrid& bg, Orbit branch = Orbit::O1);

struct ChainEquivariance {
  std::string generator;
  double residual_eta;   // relative l2 on the (l, eta) samples
  double residual_lp;    // after inverse partial Fourier in eta
  int samples;
};
std::vector<ChainEquivariance> chain_equivariance(const MoyalChain& chain, const RadialFunction& f, int N,
                                                  double half_width, double t_cut, int nt, int na, double R);

struct GramResult {
  double condition;
  std::vector<double> eigenvalues;
};
GramResult gram_injectivity(const std::vector<GridFunction>& images);

// exp(pi rho_hat(E - F)) acts at its fixed point z = i by this phase; -I acts trivially on L2(G/K).
cplx central_character(int ell);

}  // namespace sl2q
