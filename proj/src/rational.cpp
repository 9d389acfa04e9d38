#include "sl2q/rational.hpp"

#include <stdexcept>

namespace sl2q {

GQ& GQ::operator/=(const GQ& o) {
  mpq_class den = o.re * o.re + o.im * o.im;
  if (sgn(den) == 0) throw std::domain_error("GQ: division by zero");
  mpq_class r = (re * o.re + im * o.im) / den;
  mpq_class i = (im * o.re - re * o.im) / den;
  re = r; im = i;
  return *this;
}

std::string GQ::str() const {
  if (is_real()) return re.get_str();
  if (sgn(re) == 0) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "i";
  }
  std::string s = "(" + re.get_str();
  if (sgn(im) > 0) s += "+";
  s += im.get_str() + "i)";
  return s;
}

GQ parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return GQ(q);
}

}  // namespace sl2q
