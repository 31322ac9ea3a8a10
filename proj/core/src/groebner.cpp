#include "tracefree/groebner.hpp"

#include <algorithm>
#include <functional>

#include "dpoly.hpp"
#include "tracefree/error.hpp"

namespace tracefree {

using detail::BasisData;
using detail::DPoly;
using detail::Mono;
using detail::Ring;

const MonomialOrder& GroebnerBasis::order() const { return data_->ring.order(); }

const std::vector<Polynomial>& GroebnerBasis::basis() const { return data_->basis; }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : data_->polys) out.push_back(data_->ring.to_monomial(p.front().m));
  return out;
}

bool GroebnerBasis::is_unit() const {
  return data_->polys.size() == 1 && data_->polys.front().front().m.deg == 0;
}

std::size_t GroebnerBasis::pairs_reduced() const { return data_->pairs; }

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Mono lcm;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, const GroebnerOptions& options) : ring_(ring), options_(options) {}

  void insert(DPoly h) {
    ring_.make_monic(h);
    polys_.push_back(std::move(h));
    update(polys_.size() - 1);
  }

  void run() {
    while (!pairs_.empty()) {
      if (reduced_ >= options_.max_pairs) {
        throw Error(ErrorKind::ResourceLimit,
                    "Groebner pair budget of " + std::to_string(options_.max_pairs) + " exhausted");
      }
      std::size_t best = select();
      Pair pair = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      ++reduced_;

      DPoly s = spoly(pair);
      DPoly h = ring_.reduce(std::move(s), active_polys(), options_.max_terms);
      if (h.empty()) continue;
      insert(std::move(h));
      if (polys_.back().front().m.deg == 0) {
        // Unit ideal: everything else is redundant.
        pairs_.clear();
        active_ = {polys_.size() - 1};
        return;
      }
    }
  }

  std::vector<DPoly> reduced_basis() const {
    std::vector<DPoly> sorted;
    for (std::size_t idx : active_) sorted.push_back(polys_[idx]);
    std::sort(sorted.begin(), sorted.end(),
              [this](const DPoly& a, const DPoly& b) { return ring_.compare(a.front().m, b.front().m) < 0; });
    // Input polynomials enter unreduced, so drop any whose leading monomial
    // is a multiple of an earlier one.
    std::vector<DPoly> minimal;
    for (auto& p : sorted) {
      bool redundant = false;
      for (const auto& q : minimal) {
        if (detail::divides(q.front().m, p.front().m)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(std::move(p));
    }
    std::vector<DPoly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const DPoly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(&minimal[l]);
      }
      DPoly tail(minimal[k].begin() + 1, minimal[k].end());
      DPoly r = ring_.reduce(std::move(tail), others, options_.max_terms);
      DPoly full;
      full.reserve(r.size() + 1);
      full.push_back(minimal[k].front());
      full.insert(full.end(), r.begin(), r.end());
      reduced.push_back(std::move(full));
    }
    return reduced;
  }

  std::size_t pairs_reduced() const { return reduced_; }

 private:
  const Mono& lm(std::size_t idx) const { return polys_[idx].front().m; }

  std::vector<const DPoly*> active_polys() const {
    std::vector<const DPoly*> out;
    out.reserve(active_.size());
    for (std::size_t idx : active_) out.push_back(&polys_[idx]);
    return out;
  }

  // Normal strategy: smallest lcm, ties broken by pair indices.
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      int cmp = ring_.compare(pairs_[k].lcm, pairs_[best].lcm);
      if (cmp < 0 || (cmp == 0 && std::tie(pairs_[k].i, pairs_[k].j) < std::tie(pairs_[best].i, pairs_[best].j))) {
        best = k;
      }
    }
    return best;
  }

  DPoly spoly(const Pair& pair) const {
    const DPoly& f = polys_[pair.i];
    const DPoly& g = polys_[pair.j];
    Mono mf = detail::mono_div(pair.lcm, f.front().m);
    Mono mg = detail::mono_div(pair.lcm, g.front().m);
    DPoly fs = ring_.mul_mono(f, mf);
    // f and g are monic, so the leading terms cancel.
    return ring_.sub_mul(fs, Rational(1), mg, g, 1, 1);
  }

  // Gebauer-Moeller installation of the new polynomial with index h.
  void update(std::size_t h) {
    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, h, detail::mono_lcm(lm(g), lm(h))});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = detail::coprime(lm(p.i), lm(h));
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o) {
          if (detail::divides(candidates[o].lcm, p.lcm)) keep = false;
        }
        for (std::size_t o = 0; o < kept.size() && keep; ++o) {
          if (detail::divides(kept[o].lcm, p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = detail::divides(lm(h), p.lcm) && !(detail::mono_lcm(lm(p.i), lm(h)) == p.lcm) &&
                  !(detail::mono_lcm(lm(p.j), lm(h)) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept) {
      if (!detail::coprime(lm(p.i), lm(h))) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> active;
    for (std::size_t g : active_) {
      if (!detail::divides(lm(h), lm(g))) active.push_back(g);
    }
    active.push_back(h);
    active_ = std::move(active);
  }

  const Ring& ring_;
  GroebnerOptions options_;
  std::vector<DPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::size_t reduced_ = 0;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  auto data = std::make_shared<BasisData>(BasisData{Ring(order), {}, {}, 0});
  const Ring& ring = data->ring;

  std::vector<DPoly> inputs;
  for (const auto& g : generators) {
    DPoly d = ring.from_polynomial(g);
    if (!d.empty()) inputs.push_back(std::move(d));
  }
  // Deterministic processing order independent of the caller's list order.
  std::sort(inputs.begin(), inputs.end(), [&ring](const DPoly& a, const DPoly& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      int cmp = ring.compare(a[k].m, b[k].m);
      if (cmp != 0) return cmp < 0;
      Rational ca = a[k].c / a.front().c, cb = b[k].c / b.front().c;
      if (ca != cb) return ca < cb;
    }
    return a.size() < b.size();
  });

  Buchberger engine(ring, options);
  for (auto& g : inputs) {
    std::vector<const DPoly*> none;
    engine.insert(std::move(g));
  }
  engine.run();

  data->polys = engine.reduced_basis();
  data->pairs = engine.pairs_reduced();
  for (const auto& p : data->polys) data->basis.push_back(ring.to_polynomial(p));

  GroebnerBasis gb;
  gb.data_ = std::move(data);
  return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  const auto& data = gb.data();
  std::vector<const DPoly*> divisors;
  for (const auto& g : data.polys) divisors.push_back(&g);
  return data.ring.to_polynomial(data.ring.reduce(data.ring.from_polynomial(p), divisors));
}

int dimension(const GroebnerBasis& gb) {
  const auto& data = gb.data();
  if (gb.is_unit()) return -1;
  const std::size_t n = data.ring.nvars();
  // Supports of the leading monomials as variable sets.
  std::vector<std::vector<bool>> supports;
  for (const auto& p : data.polys) {
    std::vector<bool> s(n, false);
    for (std::size_t v = 0; v < n; ++v) s[v] = p.front().m.e[v] != 0;
    supports.push_back(std::move(s));
  }
  // Largest set of variables containing no leading-monomial support.
  std::vector<bool> chosen(n, false);
  int best = 0;
  std::function<void(std::size_t, int)> search = [&](std::size_t v, int size) {
    if (size + static_cast<int>(n - v) <= best) return;
    if (v == n) {
      best = size;
      return;
    }
    chosen[v] = true;
    bool ok = true;
    for (const auto& s : supports) {
      if (!s[v]) continue;
      bool inside = true;
      for (std::size_t u = 0; u < n && inside; ++u) {
        if (s[u] && !chosen[u]) inside = false;
      }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) search(v + 1, size + 1);
    chosen[v] = false;
    search(v + 1, size);
  };
  search(0, 0);
  return best;
}

}  // namespace tracefree
