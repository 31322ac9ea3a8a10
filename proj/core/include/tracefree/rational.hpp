#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace tracefree {

using Rational = mpq_class;
using Integer = mpz_class;
using Real = long double;
using Complex = std::complex<long double>;

/// Nearest long double to q (about 64 significant bits).
Real to_real(const Rational& q);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q". Throws Error{MalformedInput}.
Rational parse_rational(const std::string& text);

/// A point coordinate. Carries the exact rational value when one is known,
/// in which case the imaginary part is zero.
struct ComplexValue {
  Complex value;
  std::optional<Rational> exact;

  ComplexValue() = default;
  ComplexValue(Complex v) : value(v) {}  // NOLINT(google-explicit-constructor)
  ComplexValue(const Rational& q) : value(to_real(q), 0.0L), exact(q) {}  // NOLINT
  static ComplexValue from_int(long v) { return ComplexValue(Rational(v)); }

  Real re() const { return value.real(); }
  Real im() const { return value.imag(); }
  bool is_exact() const { return exact.has_value(); }
};

ComplexValue operator+(const ComplexValue& a, const ComplexValue& b);
ComplexValue operator-(const ComplexValue& a, const ComplexValue& b);
ComplexValue operator*(const ComplexValue& a, const ComplexValue& b);
ComplexValue operator-(const ComplexValue& a);
ComplexValue pow(const ComplexValue& a, unsigned e);

}  // namespace tracefree
