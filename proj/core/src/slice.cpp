#include "tracefree/slice.hpp"

#include <algorithm>
#include <cmath>

#include "tracefree/error.hpp"
#include "tracefree/relations.hpp"

namespace tracefree {

namespace {

using Triple = std::array<int, 3>;

std::vector<Triple> index_triples(int n) {
  std::vector<Triple> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back({a, b, c});
  return out;
}

const ComplexValue kTwo{Rational(2)};
const ComplexValue kHalf{Rational(1, 2)};

ComplexValue pair_value(const Assignment& pairs, int i, int j) {
  if (i == j) return kTwo;
  auto it = pairs.find(VarKey::pair(std::min(i, j), std::max(i, j)));
  if (it == pairs.end()) {
    throw Error(ErrorKind::UnboundVariable, VarKey::pair(std::min(i, j), std::max(i, j)).name() + " has no value");
  }
  return it->second;
}

ComplexValue det3(const std::array<std::array<ComplexValue, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// 1/2 det [x_{s_a t_b}]
ComplexValue half_cross_det(const Assignment& pairs, const Triple& s, const Triple& t) {
  std::array<std::array<ComplexValue, 3>, 3> m;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m[a][b] = pair_value(pairs, s[a], t[b]);
  return kHalf * det3(m);
}

ComplexValue divide(const ComplexValue& a, const ComplexValue& b) {
  if (a.is_exact() && b.is_exact() && *b.exact != 0) return ComplexValue(Rational(*a.exact / *b.exact));
  return ComplexValue(a.value / b.value);
}

ComplexValue square_root(const ComplexValue& d) {
  if (d.is_exact() && *d.exact >= 0) {
    Integer num = d.exact->get_num(), den = d.exact->get_den();
    Integer rn = sqrt(num), rd = sqrt(den);
    if (rn * rn == num && rd * rd == den) return ComplexValue(Rational(rn, rd));
  }
  return ComplexValue(std::sqrt(d.value));
}

Real minor_abs(const Assignment& pairs, const std::array<int, 4>& rows, const std::array<int, 4>& cols) {
  std::vector<std::vector<Complex>> m(4, std::vector<Complex>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m[a][b] = pair_value(pairs, rows[a], cols[b]).value;
  return std::abs(det(m));
}

Real rectangle_residual(const Assignment& pairs, int n) {
  Real worst = 0;
  for (int a = 3; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) worst = std::max(worst, minor_abs(pairs, {1, 2, a, b}, {1, 2, a, b}));
  return worst;
}

VarKey triple_key(const Triple& t) { return VarKey::triple(t[0], t[1], t[2]); }

Real hexagon_defect(const Assignment& pairs, const Assignment& triples, const std::vector<Triple>& ts) {
  Real worst = 0;
  for (std::size_t s = 0; s < ts.size(); ++s) {
    const ComplexValue& xs = triples.at(triple_key(ts[s]));
    for (std::size_t t = s; t < ts.size(); ++t) {
      const ComplexValue& xt = triples.at(triple_key(ts[t]));
      worst = std::max(worst, std::abs((xs * xt - half_cross_det(pairs, ts[s], ts[t])).value));
    }
  }
  return worst;
}

}  // namespace

Assignment S0Point::merged() const {
  Assignment out = pairs;
  out.insert(triples.begin(), triples.end());
  return out;
}

std::string to_string(GhostReason reason) { return reason == GhostReason::Rectangle ? "rectangle" : "hexagon"; }

std::string LiftResult::status() const {
  if (ghost) return "ghost(" + to_string(*ghost) + ")";
  return "lifts:" + std::to_string(lifts.size());
}

LiftResult lift_point(const Assignment& pairs, int n, Real tol, const std::optional<Triple>& pivot) {
  LiftResult out;
  out.rectangle_residual = rectangle_residual(pairs, n);
  if (out.rectangle_residual >= tol) {
    out.ghost = GhostReason::Rectangle;
    return out;
  }

  const std::vector<Triple> ts = index_triples(n);
  std::vector<ComplexValue> diag;
  diag.reserve(ts.size());
  for (const auto& t : ts) diag.push_back(half_cross_det(pairs, t, t));

  std::size_t best = ts.size();
  if (pivot) {
    auto it = std::find(ts.begin(), ts.end(), *pivot);
    if (it == ts.end()) throw Error(ErrorKind::IndexOutOfRange, "pivot triple is not an increasing triple in 1..n");
    if (std::abs(diag[static_cast<std::size_t>(it - ts.begin())].value) >= tol) {
      best = static_cast<std::size_t>(it - ts.begin());
    }
  }
  if (best == ts.size()) {
    Real largest = 0;
    for (std::size_t t = 0; t < ts.size(); ++t) {
      Real v = std::abs(diag[t].value);
      if (v >= tol && v > largest) {
        largest = v;
        best = t;
      }
    }
  }

  S0Point lifted{pairs, {}};
  if (best == ts.size()) {
    for (const auto& t : ts) lifted.triples.emplace(triple_key(t), ComplexValue(Rational(0)));
  } else {
    out.pivot = ts[best];
    ComplexValue root = square_root(diag[best]);
    for (const auto& t : ts) {
      ComplexValue v = t == ts[best] ? root : divide(half_cross_det(pairs, ts[best], t), root);
      lifted.triples.emplace(triple_key(t), v);
    }
  }
  out.hexagon_residual = hexagon_defect(pairs, lifted.triples, ts);
  if (out.hexagon_residual >= tol) {
    out.ghost = GhostReason::Hexagon;
    return out;
  }

  out.lifts.push_back(lifted);
  if (best != ts.size()) {
    S0Point mirror = lifted;
    for (auto& [k, v] : mirror.triples) v = -v;
    out.lifts.push_back(std::move(mirror));
    std::sort(out.lifts.begin(), out.lifts.end(),
              [tol](const S0Point& a, const S0Point& b) { return s0_less(a, b, tol); });
  }
  return out;
}

F2Result compute_f2(const Diagram& d, const SliceOptions& options) {
  validate(d);
  F2Result out;
  Ideal ideal = gen_f2(d);
  out.variety = solve_zero_dim(ideal, options.solve);
  for (const auto& p : out.variety.points) out.points.push_back({p, std::nullopt});
  return out;
}

S0Result compute_s0(const Diagram& d, const SliceOptions& options) {
  S0Result out;
  out.f2 = compute_f2(d, options);
  for (auto& p : out.f2.points) {
    p.lift = lift_point(p.coords, d.n, options.tolerance, options.pivot);
    for (const auto& l : p.lift->lifts) out.points.push_back(l);
  }
  std::sort(out.points.begin(), out.points.end(),
            [&](const S0Point& a, const S0Point& b) { return s0_less(a, b, options.tolerance); });
  return out;
}

std::vector<std::pair<F2Point, GhostReason>> find_ghosts(const Diagram& d, const SliceOptions& options) {
  std::vector<std::pair<F2Point, GhostReason>> out;
  for (auto& p : compute_s0(d, options).f2.points) {
    if (p.lift && p.lift->ghost) {
      GhostReason reason = *p.lift->ghost;
      out.emplace_back(std::move(p), reason);
    }
  }
  return out;
}

Real verify_sister_rectangles(const S0Point& p, int n) {
  Real worst = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e) worst = std::max(worst, minor_abs(p.pairs, {a, b, c, e}, {a, b, c, e}));
  for (const auto& t : index_triples(n)) {
    for (int a = 1; a <= n; ++a) {
      if (a == t[0] || a == t[1] || a == t[2]) continue;
      for (int b = 1; b <= n; ++b) {
        if (b == a || b == t[0] || b == t[1] || b == t[2]) continue;
        worst = std::max(worst, minor_abs(p.pairs, {t[0], t[1], t[2], b}, {t[0], t[1], t[2], a}));
      }
    }
  }
  return worst;
}

Real f3_residual(const Diagram& d, const S0Point& p) {
  Assignment all = p.merged();
  Real worst = 0;
  for (const auto& g : gen_f3(d).generators) worst = std::max(worst, std::abs(evaluate(g, all).value));
  return worst;
}

Real hexagon_residual(const S0Point& p, int n) { return hexagon_defect(p.pairs, p.triples, index_triples(n)); }

CoverPoint phi_hat(const Assignment& pairs, int n) {
  CoverPoint out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.z_pair.emplace(VarKey::cover_pair(a, b), pair_value(pairs, a, b));
  for (int c = 2; c <= n; ++c)
    for (int d = c + 1; d <= n; ++d)
      for (int e = d + 1; e <= n; ++e) {
        ComplexValue v = pair_value(pairs, 1, c) * pair_value(pairs, d, e) +
                         pair_value(pairs, 1, e) * pair_value(pairs, c, d) -
                         pair_value(pairs, 1, d) * pair_value(pairs, c, e);
        out.z_quad.emplace(VarKey::cover_quad(c, d, e), kHalf * v);
      }
  return out;
}

Variety s0_direct(const Diagram& d, const SolveOptions& options) {
  validate(d);
  Ideal all = combine({gen_f2(d), gen_f3(d), gen_hexagon(d.n), gen_rectangle(d.n)});
  std::set<VarKey> ring = pair_ring(d.n);
  for (const auto& v : triple_ring(d.n)) ring.insert(v);
  all.ring = ring;
  return solve_zero_dim(all, options);
}

S0Point to_s0_point(const Assignment& a) {
  S0Point out;
  for (const auto& [k, v] : a) {
    if (k.kind == VarKey::Kind::Triple) {
      out.triples.emplace(k, v);
    } else {
      out.pairs.emplace(k, v);
    }
  }
  return out;
}

bool s0_less(const S0Point& a, const S0Point& b, Real tol) {
  if (point_less(a.pairs, b.pairs, tol)) return true;
  if (point_less(b.pairs, a.pairs, tol)) return false;
  return point_less(a.triples, b.triples, tol);
}

}  // namespace tracefree
