#pragma once

#include "sl2q/lie_sl2.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace sl2q {

using cplx = std::complex<double>;

struct GroupElement {
  cplx a{1}, b{0}, c{0}, d{1};

  static GroupElement identity() { return {}; }
  // Validates |det - 1| <= tol.
  static GroupElement make(cplx a, cplx b, cplx c, cplx d, double tol = 1e-12);
  // exp of e E + h H + f F (complex coefficients).
  static GroupElement exp(cplx e, cplx h, cplx f);
  static GroupElement exp(const LieElement& X, double t = 1.0);
  // SU(1,1) element [[alpha, beta], [conj beta, conj alpha]], rescaled to det 1.
  static GroupElement su11(cplx alpha, cplx beta);

  cplx det() const { return a * d - b * c; }
  GroupElement inverse() const { return {d, -b, -c, a}; }
  std::array<cplx, 2> apply(const std::array<cplx, 2>& v) const { return {a * v[0] + b * v[1], c * v[0] + d * v[1]}; }
  cplx mobius(cplx z) const { return (a * z + b) / (c * z + d); }

  bool in_sl2r(double tol = 1e-12) const;
  bool in_su11(double tol = 1e-12) const;
  bool in_su2(double tol = 1e-12) const;
};

GroupElement operator*(const GroupElement& x, const GroupElement& y);
double distance(const GroupElement& x, const GroupElement& y);  // max entry difference

using Vec2 = std::array<cplx, 2>;
using PlaneFunction = std::function<cplx(cplx)>;
using SphereFunction = std::function<cplx(const Vec2&)>;

double norm(const Vec2& s);
Vec2 normalize(const Vec2& s);
// Canonical phase gauge: first nonzero component real positive.
Vec2 canonical_gauge(const Vec2& s);

// P(g) f(z) = |cz+d|^mu ((cz+d)/|cz+d|)^ell f((az+b)/(cz+d)) with g^{-1} = (a b; c d).
// Returns NaN at the pole of the Moebius map.
PlaneFunction act_noncompact(const GroupElement& g, cplx mu, int ell, PlaneFunction f);
cplx multiplier_noncompact(const GroupElement& g, cplx mu, int ell, cplx z);

// P(g) phi(s) = phi(g^{-1} s / |g^{-1} s|) |g^{-1} s|^mu
SphereFunction act_compact(const GroupElement& g, cplx mu, SphereFunction phi);

// [z, w] = z1 conj(w1) - z2 conj(w2)
cplx bracket_form(const Vec2& s, const Vec2& t);
enum class Orbit { O1, O2, O3 };
Orbit orbit_classify(const Vec2& s, double eps = 1e-9);
const char* orbit_name(Orbit o);

// psi(s) = (+-[s,s])^{-mu/2} phi(s) on O1 (sign +) or O2 (sign -).
// Evaluating at a point within eps of the null cone where phi != 0 throws.
SphereFunction map_A(SphereFunction phi, cplx mu, Orbit branch = Orbit::O1, double eps = 1e-6);

// Quadrature on the flag sphere with total mass 1: s = (cos(th/2), sin(th/2) e^{i ph}),
// Gauss-Legendre panels in cos(th), trapezoid in ph.
struct CP1Quadrature {
  std::vector<Vec2> nodes;
  std::vector<double> weights;
  static CP1Quadrature make(int panels, int order, int n_phi);
  cplx integrate(const SphereFunction& f) const;
};
cplx quadrature_CP1(const SphereFunction& f, int panels = 8, int order = 16, int n_phi = 128);

// Cayley element C = (1/sqrt 2)(1 i; i 1); cayley_conjugate(g) = C^{-1} g C.
GroupElement cayley_element();
GroupElement cayley_conjugate(const GroupElement& g);
GroupElement cayley_conjugate_inverse(const GroupElement& g);

// Phi(s) = |s2|^mu (s2/|s2|)^ell f(s1/s2), homogeneous of index -ell_c with ell_c = -ell.
SphereFunction picture_transfer(PlaneFunction f, cplx mu, int ell);
// f(z) = (1+|z|^2)^{mu/2} Phi((z,1)/sqrt(1+|z|^2))
PlaneFunction picture_transfer_inverse(SphereFunction phi, cplx mu);

// phi(s) = <s,c>^k bump(|<s,c>|^2) with <s,c> = conj(s1) c1 + conj(s2) c2; support |<s,c>|^2 > r0.
// Satisfies phi(lambda s) = lambda^{-k} phi(s) for |lambda| = 1.
SphereFunction homogeneous_bump(const Vec2& c, double r0, int k);

}  // namespace sl2q
