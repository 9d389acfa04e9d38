#pragma once

#include "sl2q/rational.hpp"

#include <array>
#include <complex>
#include <map>
#include <ostream>
#include <string>

namespace sl2q {

// Variables of the symbol calculus. nu is a formal parameter and may carry
// negative exponents (Laurent in nu), the coordinates may not.
enum Var : int { L = 0, LP = 1, ETA = 2, NU = 3 };

using Exps = std::array<int, 4>;

class Polynomial {
 public:
  using Terms = std::map<Exps, GQ>;

  Polynomial() = default;
  Polynomial(const GQ& c);
  Polynomial(long c) : Polynomial(GQ(c)) {}

  static Polynomial var(Var v, int power = 1);
  static Polynomial monomial(const Exps& e, const GQ& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GQ coeff(const Exps& e) const;
  GQ constant_term() const { return coeff({0, 0, 0, 0}); }

  // Total degree in the coordinates l, l', eta (nu ignored).
  int coord_degree() const;
  int max_exp(Var v) const;
  int min_exp(Var v) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GQ& c);
  Polynomial operator-() const;

  Polynomial diff(Var v) const;
  Polynomial diff(Var v, int order) const;
  Polynomial conj() const;
  Polynomial shift_nu(int k) const;  // multiply by nu^k
  // Coefficient of nu^k as a polynomial in the coordinates.
  Polynomial nu_part(int k) const;
  // Collect powers of v: returns map power -> coefficient polynomial (v removed).
  std::map<int, Polynomial> split(Var v) const;

  Polynomial substitute(Var v, const Polynomial& p) const;
  Polynomial substitute(Var v, const GQ& value) const;
  std::complex<double> eval(double l, double lp, double eta, double nu) const;

  std::string str() const;

 private:
  void add_term(const Exps& e, const GQ& c);
  Terms terms_;
  friend Polynomial operator*(const Polynomial&, const Polynomial&);
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const GQ& c);
Polynomial operator*(const GQ& c, Polynomial a);
bool operator==(const Polynomial& a, const Polynomial& b);
inline bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
Polynomial pow(const Polynomial& p, int k);
inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// Shorthands.
inline Polynomial l_() { return Polynomial::var(L); }
inline Polynomial lp_() { return Polynomial::var(LP); }
inline Polynomial eta_() { return Polynomial::var(ETA); }
inline Polynomial nu_(int k = 1) { return Polynomial::var(NU, k); }

}  // namespace sl2q
