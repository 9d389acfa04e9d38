#include "sl2q/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace sl2q {

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const char* kDNames[3] = {"d_l", "d_l'", "d_eta"};
const Var kDVars[3] = {L, LP, ETA};

}  // namespace

int var_slot(Var v) {
  if (v == NU) throw std::invalid_argument("no derivative in nu");
  return static_cast<int>(v);
}

DiffOp DiffOp::mult(const Polynomial& p) { return term({0, 0, 0}, p); }

DiffOp DiffOp::d(Var v, int order) {
  DOrders a{0, 0, 0};
  a[var_slot(v)] = order;
  return term(a, Polynomial(1));
}

DiffOp DiffOp::term(const DOrders& a, const Polynomial& c) {
  DiffOp D;
  D.add_term(a, c);
  return D;
}

void DiffOp::add_term(const DOrders& a, const Polynomial& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial DiffOp::coeff(const DOrders& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Polynomial() : it->second;
}

int DiffOp::order() const {
  int o = -1;
  for (const auto& [a, c] : terms_) o = std::max(o, a[0] + a[1] + a[2]);
  return o;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
  return r;
}

Polynomial DiffOp::apply(const Polynomial& p) const {
  Polynomial r;
  for (const auto& [a, c] : terms_) {
    Polynomial q = p;
    for (int k = 0; k < 3 && !q.is_zero(); ++k) q = q.diff(kDVars[k], a[k]);
    if (!q.is_zero()) r += c * q;
  }
  return r;
}

DiffOp DiffOp::conj() const {
  DiffOp r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, c.conj());
  return r;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    for (int k = 0; k < 3; ++k) {
      if (a[k] == 0) continue;
      os << "*" << kDNames[k];
      if (a[k] != 1) os << "^" << a[k];
    }
    first = false;
  }
  return os.str();
}

DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }

DiffOp operator*(const Polynomial& c, const DiffOp& D) {
  DiffOp r;
  for (const auto& [a, p] : D.terms()) r += DiffOp::term(a, c * p);
  return r;
}

// (c1 d^a) o (c2 d^b) = c1 sum_{g<=a} C(a,g) (d^g c2) d^{a-g+b}
DiffOp compose(const DiffOp& A, const DiffOp& B) {
  DiffOp r;
  for (const auto& [a, c1] : A.terms()) {
    for (const auto& [b, c2] : B.terms()) {
      for (int g0 = 0; g0 <= a[0]; ++g0) {
        Polynomial d0 = c2.diff(L, g0);
        if (d0.is_zero()) break;
        for (int g1 = 0; g1 <= a[1]; ++g1) {
          Polynomial d1 = d0.diff(LP, g1);
          if (d1.is_zero()) break;
          for (int g2 = 0; g2 <= a[2]; ++g2) {
            Polynomial d2 = d1.diff(ETA, g2);
            if (d2.is_zero()) break;
            long m = binom(a[0], g0) * binom(a[1], g1) * binom(a[2], g2);
            DOrders o{a[0] - g0 + b[0], a[1] - g1 + b[1], a[2] - g2 + b[2]};
            r += DiffOp::term(o, c1 * d2 * GQ(m));
          }
        }
      }
    }
  }
  return r;
}

DiffOp commutator(const DiffOp& A, const DiffOp& B) { return compose(A, B) - compose(B, A); }

bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms() == b.terms(); }

}  // namespace sl2q
