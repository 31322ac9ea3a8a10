#include "tracefree/relations.hpp"

#include <algorithm>

#include "tracefree/error.hpp"

namespace tracefree {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::F2: return "F2";
    case Provenance::F3: return "F3";
    case Provenance::Hexagon: return "H";
    case Provenance::Rectangle: return "R";
    case Provenance::Kch: return "KCH";
    case Provenance::Custom: return "custom";
  }
  return "custom";
}

void Ideal::add(const Polynomial& g) {
  if (g.is_zero()) return;
  if (std::find(generators.begin(), generators.end(), g) != generators.end()) return;
  for (const auto& v : g.variables()) ring.insert(v);
  generators.push_back(g);
}

std::set<VarKey> pair_ring(int n) {
  std::set<VarKey> ring;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) ring.insert(VarKey::pair(i, j));
  }
  return ring;
}

std::set<VarKey> triple_ring(int n) {
  std::set<VarKey> ring;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) ring.insert(VarKey::triple(i, j, k));
    }
  }
  return ring;
}

Ideal combine(const std::vector<Ideal>& parts) {
  Ideal out;
  for (const auto& part : parts) {
    out.ring.insert(part.ring.begin(), part.ring.end());
    for (const auto& g : part.generators) out.add(g);
  }
  return out;
}

Ideal gen_f2(const Diagram& d) {
  validate(d);
  Ideal ideal;
  ideal.provenance = Provenance::F2;
  ideal.ring = pair_ring(d.n);
  const int n = d.n;
  for (const auto& t : d.triples) {
    const int i = t.over, j = t.under_a, k = t.under_b;
    for (int a = 1; a <= n; ++a) {
      ideal.add(pair_var(a, k, n) - pair_var(i, j, n) * pair_var(a, i, n) + pair_var(a, j, n));
    }
  }
  return ideal;
}

Ideal gen_f3(const Diagram& d) {
  validate(d);
  Ideal ideal;
  ideal.provenance = Provenance::F3;
  const int n = d.n;
  ideal.ring = pair_ring(n);
  auto triples = triple_ring(n);
  ideal.ring.insert(triples.begin(), triples.end());
  for (const auto& t : d.triples) {
    const int i = t.over, j = t.under_a, k = t.under_b;
    for (int b = 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        ideal.add(triple_var(b, c, k, n) - pair_var(i, j, n) * triple_var(b, c, i, n) + triple_var(b, c, j, n));
      }
    }
  }
  return ideal;
}

std::vector<std::vector<Polynomial>> gram_block(const std::vector<int>& rows, const std::vector<int>& cols, int n) {
  std::vector<std::vector<Polynomial>> m;
  for (int r : rows) {
    std::vector<Polynomial> row;
    for (int c : cols) row.push_back(pair_var(r, c, n));
    m.push_back(std::move(row));
  }
  return m;
}

Polynomial hexagon_generator(const std::array<int, 3>& s, const std::array<int, 3>& t, int n) {
  Polynomial lhs = triple_var(s[0], s[1], s[2], n) * triple_var(t[0], t[1], t[2], n);
  Polynomial cross = det(gram_block({s[0], s[1], s[2]}, {t[0], t[1], t[2]}, n));
  return lhs - Rational(1, 2) * cross;
}

Ideal gen_hexagon(int n) {
  Ideal ideal;
  ideal.provenance = Provenance::Hexagon;
  ideal.ring = pair_ring(n);
  auto trip = triple_ring(n);
  ideal.ring.insert(trip.begin(), trip.end());
  std::vector<std::array<int, 3>> index_triples;
  for (const auto& v : trip) index_triples.push_back({v.idx[0], v.idx[1], v.idx[2]});
  for (std::size_t s = 0; s < index_triples.size(); ++s) {
    for (std::size_t t = s; t < index_triples.size(); ++t) {
      ideal.add(hexagon_generator(index_triples[s], index_triples[t], n));
    }
  }
  return ideal;
}

Ideal gen_rectangle(int n) {
  Ideal ideal;
  ideal.provenance = Provenance::Rectangle;
  ideal.ring = pair_ring(n);
  for (int a = 3; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      std::vector<int> idx{1, 2, a, b};
      ideal.add(det(gram_block(idx, idx, n)));
    }
  }
  return ideal;
}

Ideal gen_kch(const Diagram& d) {
  validate(d);
  Ideal ideal;
  ideal.provenance = Provenance::Kch;
  const int n = d.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) ideal.ring.insert(VarKey::kch(i, j));
  }
  for (const auto& t : d.triples) {
    const int i = t.over, j = t.under_a, k = t.under_b;
    for (int l = 1; l <= n; ++l) {
      ideal.add(kch_var(l, j, n) + kch_var(l, k, n) + kch_var(l, i, n) * kch_var(i, j, n));
    }
  }
  return ideal;
}

Polynomial kch_to_f2(const Polynomial& p) {
  std::map<VarKey, Polynomial> map;
  for (const auto& v : p.variables()) {
    if (v.kind != VarKey::Kind::KchPair) {
      throw Error(ErrorKind::ForeignVariable, v.name() + " is not a contact homology variable");
    }
    map.emplace(v, -Polynomial::variable(VarKey::pair(v.idx[0], v.idx[1])));
  }
  return p.substitute(map);
}

}  // namespace tracefree
