#pragma once

#include <vector>

#include "tracefree/rational.hpp"

namespace tracefree {

/// Dense univariate polynomial over Q, coefficient i multiplies t^i.
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const { return c_.back(); }

  UPoly derivative() const;
  UPoly monic() const;
  /// Scales to integer coefficients with content 1 and positive leading term.
  std::vector<Integer> primitive_integer() const;

  Rational operator()(const Rational& t) const;
  Complex operator()(const Complex& t) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a / b (b nonzero).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic greatest common divisor.
UPoly gcd(UPoly a, UPoly b);

/// p / gcd(p, p'), monic.
UPoly square_free_part(const UPoly& p);

}  // namespace tracefree
