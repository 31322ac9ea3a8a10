// Internal dense-exponent polynomial representation used by the Groebner,
// quotient-algebra and solving code. Not installed.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tracefree/groebner.hpp"
#include "tracefree/poly.hpp"

namespace tracefree::detail {

struct Mono {
  std::vector<std::uint16_t> e;
  unsigned deg = 0;
  std::uint64_t mask = 0;

  void refresh();
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

struct Term {
  Mono m;
  Rational c;
};

/// Terms sorted strictly decreasing in the ring's monomial order.
using DPoly = std::vector<Term>;

Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b);
/// a | b
bool divides(const Mono& a, const Mono& b);
/// b / a, assuming a | b
Mono mono_div(const Mono& b, const Mono& a);
bool coprime(const Mono& a, const Mono& b);

/// Variable ordering and monomial comparison for one polynomial ring.
class Ring {
 public:
  explicit Ring(MonomialOrder order);

  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.variables.size(); }
  int index_of(const VarKey& v) const;

  /// -1, 0, 1 for a < b, a == b, a > b.
  int compare(const Mono& a, const Mono& b) const;

  Mono one() const;
  Mono var(std::size_t index, unsigned exponent = 1) const;

  DPoly from_polynomial(const Polynomial& p) const;
  Polynomial to_polynomial(const DPoly& p) const;
  Monomial to_monomial(const Mono& m) const;

  void sort(DPoly& p) const;
  DPoly add(const DPoly& a, const DPoly& b) const;
  /// a - c * m * b, where the leading terms may cancel.
  DPoly sub_mul(const DPoly& a, const Rational& c, const Mono& m, const DPoly& b, std::size_t skip_a = 0,
                std::size_t skip_b = 0) const;
  DPoly mul(const DPoly& a, const DPoly& b) const;
  DPoly mul_mono(const DPoly& a, const Mono& m) const;
  void make_monic(DPoly& p) const;

  /// Full reduction modulo a list of monic polynomials.
  DPoly reduce(DPoly p, const std::vector<const DPoly*>& divisors, std::size_t max_terms = 0) const;

 private:
  MonomialOrder order_;
  std::map<VarKey, int> index_;
};

}  // namespace tracefree::detail

namespace tracefree::detail {

struct BasisData {
  Ring ring;
  std::vector<DPoly> polys;
  std::vector<Polynomial> basis;
  std::size_t pairs = 0;
};

}  // namespace tracefree::detail
