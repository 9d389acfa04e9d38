#include "sl2q/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sl2q {

namespace {
const char* kVarNames[4] = {"l", "l'", "eta", "nu"};
}

Polynomial::Polynomial(const GQ& c) {
  if (!c.is_zero()) terms_.emplace(Exps{0, 0, 0, 0}, c);
}

Polynomial Polynomial::var(Var v, int power) {
  Exps e{0, 0, 0, 0};
  if (power < 0 && v != NU) throw std::invalid_argument("negative power of a coordinate");
  e[v] = power;
  return monomial(e, GQ(1));
}

Polynomial Polynomial::monomial(const Exps& e, const GQ& c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exps& e, const GQ& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{0, 0, 0, 0});
}

GQ Polynomial::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GQ() : it->second;
}

int Polynomial::coord_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int Polynomial::max_exp(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[v] > d) d = e[v];
    first = false;
  }
  return d;
}

int Polynomial::min_exp(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[v] < d) d = e[v];
    first = false;
  }
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::diff(Var v) const {
  if (v == NU) throw std::invalid_argument("nu is a parameter, not a coordinate");
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exps f = e;
    f[v] -= 1;
    r.add_term(f, c * GQ(e[v]));
  }
  return r;
}

Polynomial Polynomial::diff(Var v, int order) const {
  if (v == NU && order > 0) throw std::invalid_argument("nu is a parameter, not a coordinate");
  Polynomial r = *this;
  for (int k = 0; k < order && !r.is_zero(); ++k) r = r.diff(v);
  return r;
}

Polynomial Polynomial::conj() const {
  Polynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

Polynomial Polynomial::shift_nu(int k) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exps f = e;
    f[NU] += k;
    r.terms_.emplace(f, c);
  }
  return r;
}

Polynomial Polynomial::nu_part(int k) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (e[NU] != k) continue;
    Exps f = e;
    f[NU] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

std::map<int, Polynomial> Polynomial::split(Var v) const {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    Exps f = e;
    f[v] = 0;
    out[e[v]].add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& p) const {
  Polynomial r;
  std::map<int, Polynomial> powers;
  for (const auto& [k, rest] : split(v)) {
    if (k < 0) throw std::invalid_argument("substitute: negative power needs a scalar value");
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, pow(p, k)).first;
    r += rest * it->second;
  }
  return r;
}

Polynomial Polynomial::substitute(Var v, const GQ& value) const {
  Polynomial r;
  for (const auto& [k, rest] : split(v)) {
    GQ f(1);
    if (k >= 0) {
      for (int i = 0; i < k; ++i) f *= value;
    } else {
      for (int i = 0; i < -k; ++i) f /= value;
    }
    r += rest * f;
  }
  return r;
}

std::complex<double> Polynomial::eval(double l, double lp, double eta, double nu) const {
  const double x[4] = {l, lp, eta, nu};
  std::complex<double> s = 0;
  for (const auto& [e, c] : terms_) {
    double m = 1;
    for (int i = 0; i < 4; ++i) m *= std::pow(x[i], e[i]);
    s += c.to_complex() * m;
  }
  return s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Deterministic order: the map order (lexicographic in exponents), reversed.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool neg = c.is_real() && sgn(c.re) < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) cs = (-c).str();
    bool unit = (cs == "1");
    bool mono = e != Exps{0, 0, 0, 0};
    if (!unit || !mono) os << cs;
    bool star = !unit;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << kVarNames[i];
      if (e[i] != 1) os << "^" << e[i];
      star = true;
    }
    first = false;
  }
  return os.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(Polynomial a, const GQ& c) { return a *= c; }
Polynomial operator*(const GQ& c, Polynomial a) { return a *= c; }

bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms() == b.terms(); }

Polynomial pow(const Polynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial r(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

}  // namespace sl2q
