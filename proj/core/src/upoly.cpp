#include "tracefree/upoly.hpp"

#include <algorithm>

#include "tracefree/error.hpp"

namespace tracefree {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UPoly(std::move(coeffs));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> m = c_;
  Rational lc = c_.back();
  for (auto& x : m) x /= lc;
  return UPoly(std::move(m));
}

std::vector<Integer> UPoly::primitive_integer() const {
  Integer lcm_den = 1;
  for (const auto& x : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& x : c_) {
    Integer v = x.get_num() * (lcm_den / x.get_den());
    out.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (content != 0) {
    if (out.back() < 0) content = -content;
    for (auto& v : out) v /= content;
  }
  return out;
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex UPoly::operator()(const Complex& t) const {
  Complex acc(0.0L, 0.0L);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + to_real(*it);
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  const Rational& lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    Rational q = rem[k + db] / lb;
    quot[k] = q;
    if (q == 0) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= q * b.coeffs()[i];
  }
  rem.resize(db);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UPoly square_free_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

}  // namespace tracefree
