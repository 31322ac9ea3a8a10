#include "tracefree/zero_dim.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <random>

#include "dpoly.hpp"
#include "quotient.hpp"
#include "tracefree/error.hpp"

namespace tracefree {

namespace {

using detail::Quotient;

std::vector<Rational> unit_weights(std::size_t n, std::size_t index) {
  std::vector<Rational> w(n);
  w[index] = 1;
  return w;
}

// Snaps a numerically evaluated coordinate onto the nearest root of the
// variable's own minimal polynomial when that root is unambiguous.
ComplexValue snap(const Complex& value, const std::vector<ComplexValue>& roots) {
  if (roots.empty()) return value;
  std::size_t best = 0;
  Real d1 = std::abs(value - roots[0].value);
  Real d2 = std::numeric_limits<Real>::infinity();
  for (std::size_t r = 1; r < roots.size(); ++r) {
    Real d = std::abs(value - roots[r].value);
    if (d < d1) {
      d2 = d1;
      d1 = d;
      best = r;
    } else if (d < d2) {
      d2 = d;
    }
  }
  Real scale = std::max<Real>(1, std::abs(roots[best].value));
  if (d1 < 1e-5L * scale && d2 > 8 * d1) return roots[best];
  return value;
}

}  // namespace

VarKey default_parameter(const Ideal& ideal) {
  std::map<VarKey, std::size_t> counts;
  for (const auto& v : ideal.ring) counts[v] = 0;
  for (const auto& g : ideal.generators) {
    for (const auto& v : g.variables()) ++counts[v];
  }
  if (counts.empty()) throw Error(ErrorKind::MalformedInput, "polynomial ring has no variables");
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

bool point_less(const Assignment& a, const Assignment& b, Real tol) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (complex_less(ia->second.value, ib->second.value, tol)) return true;
    if (complex_less(ib->second.value, ia->second.value, tol)) return false;
  }
  return a.size() < b.size();
}

Real point_distance(const Assignment& a, const Assignment& b) {
  Real d = 0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it != b.end()) d = std::max(d, std::abs(v.value - it->second.value));
  }
  return d;
}

Variety solve_zero_dim(const Ideal& ideal, const SolveOptions& options) {
  Variety out;
  for (const auto& g : ideal.generators) {
    for (const auto& v : g.variables()) {
      if (ideal.ring.count(v) == 0) {
        throw Error(ErrorKind::ForeignVariable, v.name() + " is not declared in the ring");
      }
    }
  }

  if (ideal.ring.empty()) {
    bool inconsistent = std::any_of(ideal.generators.begin(), ideal.generators.end(),
                                    [](const Polynomial& g) { return !g.is_zero(); });
    out.dimension = inconsistent ? -1 : 0;
    if (!inconsistent) out.points.emplace_back();
    out.multiplicity = inconsistent ? 0 : 1;
    return out;
  }

  const VarKey parameter = options.parameter.value_or(default_parameter(ideal));
  if (ideal.ring.count(parameter) == 0) {
    throw Error(ErrorKind::ForeignVariable, parameter.name() + " is not declared in the ring");
  }
  std::vector<VarKey> vars;
  for (const auto& v : ideal.ring) {
    if (v != parameter) vars.push_back(v);
  }
  vars.push_back(parameter);
  const std::size_t n = vars.size();
  const std::size_t param_index = n - 1;
  out.eliminant_variable = parameter;

  MonomialOrder order = MonomialOrder::grevlex(vars);
  GroebnerBasis gb = buchberger(ideal.generators, order, options.groebner);
  out.groebner_pairs = gb.pairs_reduced();
  if (gb.is_unit()) {
    out.dimension = -1;
    return out;
  }
  int dim = dimension(gb);
  if (dim > 0) throw NotZeroDimensionalError(dim);
  out.dimension = 0;

  // Radical: adjoin the square-free part of each variable's minimal polynomial.
  std::vector<UPoly> var_minpolys(n);
  {
    Quotient q(gb.data(), options.max_quotient);
    out.multiplicity = q.size();
    std::vector<Polynomial> extra;
    for (std::size_t v = 0; v < n; ++v) {
      UPoly m = q.minimal_polynomial(unit_weights(n, v));
      UPoly s = square_free_part(m);
      if (s.degree() < m.degree()) extra.push_back(Polynomial::from_univariate(s.coeffs(), vars[v]));
      var_minpolys[v] = s;
    }
    if (!extra.empty()) {
      std::vector<Polynomial> gens = gb.basis();
      gens.insert(gens.end(), extra.begin(), extra.end());
      gb = buchberger(gens, order, options.groebner);
      out.groebner_pairs += gb.pairs_reduced();
    }
  }
  Quotient q(gb.data(), options.max_quotient);

  // Separating linear form: the parameter if possible, else random combinations.
  std::vector<UPoly> param;
  UPoly h;
  std::vector<Rational> weights = unit_weights(n, param_index);
  std::mt19937_64 rng(options.seed);
  bool found = q.parametrize(weights, param, h);
  for (int attempt = 0; !found && attempt < 64; ++attempt) {
    const long range = 3 + 4L * attempt;
    std::uniform_int_distribution<long> dist(-range, range);
    for (std::size_t v = 0; v + 1 < n; ++v) weights[v] = Rational(dist(rng));
    found = q.parametrize(weights, param, h);
  }
  if (!found) throw Error(ErrorKind::ResourceLimit, "no separating linear form found");

  out.eliminant = q.minimal_polynomial(unit_weights(n, param_index));

  std::vector<std::vector<ComplexValue>> var_roots(n);
  for (std::size_t v = 0; v < n; ++v) var_roots[v] = univariate_roots(var_minpolys[v], options.roots);

  for (const auto& u : univariate_roots(h, options.roots)) {
    Assignment point;
    for (std::size_t v = 0; v < n; ++v) {
      if (u.is_exact()) {
        point.emplace(vars[v], ComplexValue(param[v](*u.exact)));
      } else {
        point.emplace(vars[v], snap(param[v](u.value), var_roots[v]));
      }
    }
    bool duplicate = std::any_of(out.points.begin(), out.points.end(), [&](const Assignment& p) {
      return point_distance(p, point) < options.tolerance;
    });
    if (!duplicate) out.points.push_back(std::move(point));
  }

  for (const auto& p : out.points) {
    for (const auto& g : ideal.generators) {
      out.max_residual = std::max(out.max_residual, std::abs(evaluate(g, p).value));
    }
  }
  std::sort(out.points.begin(), out.points.end(),
            [&](const Assignment& a, const Assignment& b) { return point_less(a, b, options.tolerance); });
  return out;
}

}  // namespace tracefree
