// Finite-dimensional quotient algebra Q[x]/I for a zero-dimensional ideal,
// built from a reduced Groebner basis. Not installed.
#pragma once

#include <vector>

#include "dpoly.hpp"
#include "tracefree/upoly.hpp"

namespace tracefree::detail {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // column-major: m[col][row]

/// Incrementally built span of vectors over Q. Each inserted vector gets the
/// next index; reduction reports the combination of inserted vectors.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  /// Tries to write w as a combination of the inserted vectors. On success
  /// returns true and fills coeffs; otherwise inserts w and returns false.
  bool reduce_or_insert(const QVector& w, QVector& coeffs);
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;    // echelon vectors
  std::vector<QVector> combos_;  // rows_[r] = sum combos_[r][k] * input_k
  std::vector<std::size_t> pivots_;
};

class Quotient {
 public:
  /// Throws Error{ResourceLimit} when the staircase exceeds max_size.
  Quotient(const BasisData& gb, std::size_t max_size);

  std::size_t size() const { return staircase_.size(); }
  const std::vector<Mono>& staircase() const { return staircase_; }

  /// Normal-form coordinates of a polynomial in the staircase basis.
  QVector coords(const DPoly& p) const;
  /// Coordinates of the unit element.
  QVector unit() const;
  /// Multiplication by the linear form sum weights[v] * x_v.
  QVector multiply_linear(const std::vector<Rational>& weights, const QVector& vec) const;

  /// Minimal polynomial of the linear form (monic).
  UPoly minimal_polynomial(const std::vector<Rational>& weights) const;

  /// When the linear form generates the algebra, expresses every variable
  /// as a polynomial in it. Returns false if it does not.
  bool parametrize(const std::vector<Rational>& weights, std::vector<UPoly>& out, UPoly& minpoly) const;

 private:
  const BasisData& gb_;
  std::vector<Mono> staircase_;
  std::vector<QMatrix> mult_;  // one matrix per variable
};

}  // namespace tracefree::detail
