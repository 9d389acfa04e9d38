#pragma once

#include "sl2q/polynomial.hpp"

#include <array>
#include <map>
#include <ostream>
#include <string>

namespace sl2q {

// Derivative orders in (d_l, d_l', d_eta).
using DOrders = std::array<int, 3>;

// Finite sum  sum_alpha c_alpha(l,l',eta,nu) d^alpha  with coefficients on the left.
class DiffOp {
 public:
  using Terms = std::map<DOrders, Polynomial>;

  DiffOp() = default;
  static DiffOp identity() { return mult(Polynomial(1)); }
  static DiffOp mult(const Polynomial& p);
  static DiffOp d(Var v, int order = 1);
  static DiffOp term(const DOrders& a, const Polynomial& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coeff(const DOrders& a) const;
  int order() const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp operator-() const;

  Polynomial apply(const Polynomial& p) const;
  DiffOp conj() const;

  std::string str() const;

 private:
  void add_term(const DOrders& a, const Polynomial& c);
  Terms terms_;
};

DiffOp operator+(DiffOp a, const DiffOp& b);
DiffOp operator-(DiffOp a, const DiffOp& b);
DiffOp operator*(const Polynomial& c, const DiffOp& D);
DiffOp compose(const DiffOp& A, const DiffOp& B);
DiffOp commutator(const DiffOp& A, const DiffOp& B);
bool operator==(const DiffOp& a, const DiffOp& b);
inline bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

inline std::ostream& operator<<(std::ostream& os, const DiffOp& d) { return os << d.str(); }

int var_slot(Var v);  // L->0, LP->1, ETA->2; throws for NU

}  // namespace sl2q
