#include "tracefree/rational.hpp"

#include "tracefree/error.hpp"

namespace tracefree {

Real to_real(const Rational& q) {
  if (q == 0) return 0.0L;
  // Two-term expansion recovers ~106 bits before rounding to long double.
  mpf_class f(q, 192);
  double hi = f.get_d();
  mpf_class rest(f - hi, 192);
  double lo = rest.get_d();
  mpf_class rest2(rest - lo, 192);
  return static_cast<Real>(hi) + static_cast<Real>(lo) + static_cast<Real>(rest2.get_d());
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::MalformedInput, "bad rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
  if (a.exact && b.exact) return ComplexValue(Rational(*a.exact + *b.exact));
  return ComplexValue(a.value + b.value);
}

ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) {
  if (a.exact && b.exact) return ComplexValue(Rational(*a.exact - *b.exact));
  return ComplexValue(a.value - b.value);
}

ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
  if (a.exact && b.exact) return ComplexValue(Rational(*a.exact * *b.exact));
  return ComplexValue(a.value * b.value);
}

ComplexValue operator-(const ComplexValue& a) {
  if (a.exact) return ComplexValue(Rational(-*a.exact));
  return ComplexValue(-a.value);
}

ComplexValue pow(const ComplexValue& a, unsigned e) {
  ComplexValue result(Rational(1));
  ComplexValue base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace tracefree
