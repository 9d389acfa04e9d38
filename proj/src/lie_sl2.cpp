#include "sl2q/lie_sl2.hpp"

#include <stdexcept>

namespace sl2q {

LiePoly to_poly(const LieElement& X) { return {Polynomial(X.e), Polynomial(X.h), Polynomial(X.f)}; }

LieElement to_number(const LiePoly& X) {
  if (!X.e.is_constant() || !X.h.is_constant() || !X.f.is_constant())
    throw std::invalid_argument("to_number: non-constant coefficient");
  return {X.e.constant_term(), X.h.constant_term(), X.f.constant_term()};
}

std::string str(const LieElement& X) {
  return "(" + X.e.str() + ")E + (" + X.h.str() + ")H + (" + X.f.str() + ")F";
}

template <class T>
T SymplecticFrame::omega_poly(const LieElem<T>& X, const LieElem<T>& Y) const {
  LieElem<T> oo{T(o.e), T(o.h), T(o.f)};
  return killing(oo, bracket(X, Y));
}
template Polynomial SymplecticFrame::omega_poly(const LiePoly&, const LiePoly&) const;
template GQ SymplecticFrame::omega_poly(const LieElement&, const LieElement&) const;

const SymplecticFrame& default_frame() {
  static const SymplecticFrame fr = [] {
    SymplecticFrame f;
    f.o = {GQ(0), GQ::frac(1, 8), GQ(0)};
    f.omega_EF = f.omega(LieElement::E(), LieElement::F());
    f.sigma = -1;
    return f;
  }();
  return fr;
}

namespace {

// Ad(exp(t X)) Y for nilpotent ad X of order 3: Y + t[X,Y] + t^2/2 [X,[X,Y]].
LiePoly ad_exp_nilpotent(const LiePoly& X, const Polynomial& t, const LiePoly& Y) {
  LiePoly b1 = bracket(X, Y);
  LiePoly b2 = bracket(X, b1);
  Polynomial half_t2 = t * t * GQ::frac(1, 2);
  return Y + t * b1 + half_t2 * b2;
}

}  // namespace

LiePoly chart_phi(const Polynomial& l, const Polynomial& lp, const SymplecticFrame& fr) {
  LiePoly o = to_poly(fr.o);
  LiePoly y = ad_exp_nilpotent(LiePoly::F(), lp, o);
  return ad_exp_nilpotent(LiePoly::E(), l, y);
}

LiePoly chart_phi(const SymplecticFrame& fr) { return chart_phi(l_(), lp_(), fr); }

Polynomial moment_map(const LieElement& A, const SymplecticFrame& fr) {
  return killing(chart_phi(fr), to_poly(A));
}

GQ spur(const LieElement& h, const SymplecticFrame& fr) {
  if (!h.e.is_zero() || !h.f.is_zero()) throw std::invalid_argument("spur: argument not in span(H)");
  return fr.omega(bracket(h, LieElement::E()), LieElement::F());
}

Polynomial spur(const LiePoly& h, const SymplecticFrame& fr) {
  if (!h.e.is_zero() || !h.f.is_zero()) throw std::invalid_argument("spur: argument not in span(H)");
  return fr.omega_poly(bracket(h, LiePoly::E()), LiePoly::F());
}

Decomposition decompose(const LieElement& A) {
  return {{GQ(0), A.h, GQ(0)}, {A.e, GQ(0), GQ(0)}, {GQ(0), GQ(0), A.f}};
}

Polynomial poisson(const Polynomial& u, const Polynomial& v, int sigma) {
  Polynomial r = u.diff(L) * v.diff(LP) - u.diff(LP) * v.diff(L);
  return r * GQ(sigma);
}

}  // namespace sl2q
