#include "quotient.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "tracefree/error.hpp"

namespace tracefree::detail {

bool Span::reduce_or_insert(const QVector& w, QVector& coeffs) {
  const std::size_t k = rows_.size();
  QVector v = w;
  QVector combo(k + 1);
  combo[k] = 1;  // v = input_k - sum ...
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    Rational f = v[p];  // rows_ are normalized to pivot 1
    for (std::size_t i = 0; i < dim_; ++i) {
      if (rows_[r][i] != 0) v[i] -= f * rows_[r][i];
    }
    for (std::size_t i = 0; i < combos_[r].size(); ++i) {
      if (combos_[r][i] != 0) combo[i] -= f * combos_[r][i];
    }
  }
  std::size_t pivot = dim_;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == dim_) {
    // 0 = input_k + sum_{i<k} combo[i] input_i
    coeffs.assign(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = -combo[i];
    return true;
  }
  Rational inv = 1 / v[pivot];
  for (auto& x : v) x *= inv;
  for (auto& x : combo) x *= inv;
  rows_.push_back(std::move(v));
  combos_.push_back(std::move(combo));
  pivots_.push_back(pivot);
  return false;
}

Quotient::Quotient(const BasisData& gb, std::size_t max_size) : gb_(gb) {
  const Ring& ring = gb.ring;
  const std::size_t n = ring.nvars();
  auto standard = [&gb](const Mono& m) {
    for (const auto& g : gb.polys) {
      if (divides(g.front().m, m)) return false;
    }
    return true;
  };

  std::map<std::vector<std::uint16_t>, std::size_t> seen;
  std::deque<Mono> queue;
  Mono one = ring.one();
  if (standard(one)) {
    queue.push_back(one);
    seen.emplace(one.e, 0);
  }
  while (!queue.empty()) {
    Mono m = std::move(queue.front());
    queue.pop_front();
    staircase_.push_back(m);
    if (staircase_.size() > max_size) {
      throw Error(ErrorKind::ResourceLimit,
                  "quotient algebra larger than " + std::to_string(max_size) + " standard monomials");
    }
    for (std::size_t v = 0; v < n; ++v) {
      Mono next = mono_mul(m, ring.var(v));
      if (seen.count(next.e) != 0 || !standard(next)) continue;
      seen.emplace(next.e, 0);
      queue.push_back(std::move(next));
    }
  }
  std::sort(staircase_.begin(), staircase_.end(),
            [&ring](const Mono& a, const Mono& b) { return ring.compare(a, b) < 0; });

  std::vector<const DPoly*> divisors;
  for (const auto& g : gb.polys) divisors.push_back(&g);
  mult_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    mult_[v].reserve(staircase_.size());
    for (const auto& b : staircase_) {
      DPoly p{Term{mono_mul(b, ring.var(v)), Rational(1)}};
      mult_[v].push_back(coords(ring.reduce(std::move(p), divisors)));
    }
  }
}

QVector Quotient::coords(const DPoly& p) const {
  const Ring& ring = gb_.ring;
  std::vector<const DPoly*> divisors;
  for (const auto& g : gb_.polys) divisors.push_back(&g);
  DPoly r = ring.reduce(p, divisors);
  QVector out(staircase_.size());
  for (const auto& t : r) {
    auto it = std::lower_bound(staircase_.begin(), staircase_.end(), t.m,
                               [&ring](const Mono& a, const Mono& b) { return ring.compare(a, b) < 0; });
    out[static_cast<std::size_t>(it - staircase_.begin())] = t.c;
  }
  return out;
}

QVector Quotient::unit() const {
  QVector out(staircase_.size());
  if (!out.empty()) out[0] = 1;  // the constant monomial is the smallest
  return out;
}

QVector Quotient::multiply_linear(const std::vector<Rational>& weights, const QVector& vec) const {
  const std::size_t d = staircase_.size();
  QVector out(d);
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (weights[v] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (vec[j] == 0) continue;
      Rational f = weights[v] * vec[j];
      const QVector& col = mult_[v][j];
      for (std::size_t i = 0; i < d; ++i) {
        if (col[i] != 0) out[i] += f * col[i];
      }
    }
  }
  return out;
}

UPoly Quotient::minimal_polynomial(const std::vector<Rational>& weights) const {
  Span span(staircase_.size());
  QVector v = unit();
  QVector coeffs;
  while (!span.reduce_or_insert(v, coeffs)) v = multiply_linear(weights, v);
  coeffs.push_back(Rational(1));
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) coeffs[i] = -coeffs[i];
  return UPoly(std::move(coeffs));
}

bool Quotient::parametrize(const std::vector<Rational>& weights, std::vector<UPoly>& out, UPoly& minpoly) const {
  const std::size_t d = staircase_.size();
  Span span(d);
  QVector v = unit();
  QVector coeffs;
  while (!span.reduce_or_insert(v, coeffs)) v = multiply_linear(weights, v);
  coeffs.push_back(Rational(1));
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) coeffs[i] = -coeffs[i];
  minpoly = UPoly(std::move(coeffs));
  if (static_cast<std::size_t>(minpoly.degree()) != d) return false;

  out.clear();
  const Ring& ring = gb_.ring;
  for (std::size_t var = 0; var < ring.nvars(); ++var) {
    DPoly p{Term{ring.var(var), Rational(1)}};
    QVector c;
    span.reduce_or_insert(coords(p), c);
    out.emplace_back(std::move(c));
  }
  return true;
}

}  // namespace tracefree::detail
