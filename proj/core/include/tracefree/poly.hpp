#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tracefree/rational.hpp"

namespace tracefree {

/// Name of a coordinate variable.
///
///   Pair(i,j)          x_ij,   i < j     trace coordinate of m_i m_j
///   Triple(i,j,k)      x_ijk,  i < j < k trace coordinate of m_i m_j m_k
///   KchPair(i,j)       a_ij,   i < j     knot contact homology generator
///   CoverPair(a,b)     z_ab,   a < b     branched-cover coordinate
///   CoverQuad(1,c,d,e) z_1cde, 1 < c < d < e
///
/// Construct through the factory functions; they enforce the index order.
struct VarKey {
  enum class Kind : std::uint8_t { Pair, Triple, KchPair, CoverPair, CoverQuad };

  Kind kind = Kind::Pair;
  std::array<std::uint8_t, 4> idx{};

  static VarKey pair(int i, int j);
  static VarKey triple(int i, int j, int k);
  static VarKey kch(int i, int j);
  static VarKey cover_pair(int a, int b);
  static VarKey cover_quad(int c, int d, int e);

  int arity() const;
  /// "x12", "x123", "a12", "z12", "z1234". Indices above 9 are joined with '_'.
  std::string name() const;
  /// Index digits only ("12", "123"), the key used by JSON point records.
  std::string index_string() const;

  friend bool operator==(const VarKey&, const VarKey&) = default;
  friend auto operator<=>(const VarKey&, const VarKey&) = default;
};

/// Parses a name produced by VarKey::name(). Throws Error{MalformedInput}.
VarKey parse_var(const std::string& name);

/// Product of variables with positive exponents, kept sorted by VarKey.
class Monomial {
 public:
  using Factor = std::pair<VarKey, unsigned>;

  Monomial() = default;
  explicit Monomial(VarKey v, unsigned e = 1);
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const;
  unsigned exponent(const VarKey& v) const;
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

using Assignment = std::map<VarKey, ComplexValue>;

/// Sparse multivariate polynomial with exact rational coefficients. No zero
/// coefficients are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(const VarKey& v);
  static Polynomial term(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned total_degree() const;
  std::size_t size() const { return terms_.size(); }
  std::set<VarKey> variables() const;

  /// Coefficient list of a polynomial in the single variable v (index = power).
  /// Throws Error{ForeignVariable} when another variable occurs.
  std::vector<Rational> univariate_coefficients(const VarKey& v) const;
  static Polynomial from_univariate(const std::vector<Rational>& coeffs, const VarKey& v);

  /// Replaces each variable found in `map` by the given polynomial.
  Polynomial substitute(const std::map<VarKey, Polynomial>& map) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

  /// Canonical text: terms in graded reverse lexicographic order (variables
  /// ordered by VarKey), coefficients as p/q, e.g. "x13^2 - x34 - 2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// x_ij with x_ii = 2 and x_ji = x_ij. Indices must lie in 1..n.
Polynomial pair_var(int i, int j, int n);
/// x_ijk with sign(sigma) reordering; any repeated index gives 0.
Polynomial triple_var(int i, int j, int k, int n);
/// a_ij with a_ii = -2 and a_ji = a_ij.
Polynomial kch_var(int i, int j, int n);

/// Laplace expansion. Throws Error{NonSquare}.
Polynomial det(const std::vector<std::vector<Polynomial>>& matrix);

/// Exact when every needed value is exact, floating otherwise.
/// Throws Error{UnboundVariable}.
ComplexValue evaluate(const Polynomial& p, const Assignment& assignment);

/// Complex Laplace/LU determinant used for numeric residual checks.
Complex det(std::vector<std::vector<Complex>> matrix);

}  // namespace tracefree
