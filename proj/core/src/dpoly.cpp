#include "dpoly.hpp"

#include <algorithm>

#include "tracefree/error.hpp"

namespace tracefree::detail {

void Mono::refresh() {
  deg = 0;
  mask = 0;
  for (std::size_t v = 0; v < e.size(); ++v) {
    deg += e[v];
    if (e[v] != 0) mask |= std::uint64_t{1} << (v % 64);
  }
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out;
  out.e.resize(a.e.size());
  for (std::size_t v = 0; v < a.e.size(); ++v) out.e[v] = static_cast<std::uint16_t>(a.e[v] + b.e[v]);
  out.deg = a.deg + b.deg;
  out.mask = a.mask | b.mask;
  return out;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono out;
  out.e.resize(a.e.size());
  for (std::size_t v = 0; v < a.e.size(); ++v) out.e[v] = std::max(a.e[v], b.e[v]);
  out.refresh();
  return out;
}

bool divides(const Mono& a, const Mono& b) {
  if ((a.mask & ~b.mask) != 0 || a.deg > b.deg) return false;
  for (std::size_t v = 0; v < a.e.size(); ++v) {
    if (a.e[v] > b.e[v]) return false;
  }
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
  Mono out;
  out.e.resize(b.e.size());
  for (std::size_t v = 0; v < b.e.size(); ++v) out.e[v] = static_cast<std::uint16_t>(b.e[v] - a.e[v]);
  out.refresh();
  return out;
}

bool coprime(const Mono& a, const Mono& b) {
  if ((a.mask & b.mask) == 0) return true;
  for (std::size_t v = 0; v < a.e.size(); ++v) {
    if (a.e[v] != 0 && b.e[v] != 0) return false;
  }
  return true;
}

Ring::Ring(MonomialOrder order) : order_(std::move(order)) {
  for (std::size_t v = 0; v < order_.variables.size(); ++v) {
    auto [it, inserted] = index_.emplace(order_.variables[v], static_cast<int>(v));
    if (!inserted) throw Error(ErrorKind::MalformedInput, "variable listed twice in monomial order");
  }
}

int Ring::index_of(const VarKey& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int Ring::compare(const Mono& a, const Mono& b) const {
  const std::size_t n = a.e.size();
  if (order_.kind == MonomialOrder::Kind::GrevLex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (std::size_t v = n; v-- > 0;) {
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
  }
  return 0;
}

Mono Ring::one() const {
  Mono m;
  m.e.assign(nvars(), 0);
  return m;
}

Mono Ring::var(std::size_t index, unsigned exponent) const {
  Mono m = one();
  m.e[index] = static_cast<std::uint16_t>(exponent);
  m.refresh();
  return m;
}

DPoly Ring::from_polynomial(const Polynomial& p) const {
  DPoly out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Mono mono = one();
    for (const auto& [v, e] : m.factors()) {
      int idx = index_of(v);
      if (idx < 0) throw Error(ErrorKind::ForeignVariable, v.name() + " is not in the polynomial ring");
      mono.e[static_cast<std::size_t>(idx)] = static_cast<std::uint16_t>(e);
    }
    mono.refresh();
    out.push_back({std::move(mono), c});
  }
  sort(out);
  return out;
}

Monomial Ring::to_monomial(const Mono& m) const {
  std::vector<Monomial::Factor> factors;
  for (std::size_t v = 0; v < m.e.size(); ++v) {
    if (m.e[v] != 0) factors.emplace_back(order_.variables[v], m.e[v]);
  }
  return Monomial(std::move(factors));
}

Polynomial Ring::to_polynomial(const DPoly& p) const {
  Polynomial out;
  for (const auto& t : p) out += Polynomial::term(t.c, to_monomial(t.m));
  return out;
}

void Ring::sort(DPoly& p) const {
  std::sort(p.begin(), p.end(), [this](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
}

DPoly Ring::add(const DPoly& a, const DPoly& b) const {
  DPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : compare(a[i].m, b[j].m);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
    } else {
      Rational c = a[i].c + b[j].c;
      if (c != 0) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

DPoly Ring::sub_mul(const DPoly& a, const Rational& c, const Mono& m, const DPoly& b, std::size_t skip_a,
                    std::size_t skip_b) const {
  DPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = skip_a, j = skip_b;
  Mono shifted;
  bool have_shifted = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_shifted) {
      shifted = mono_mul(b[j].m, m);
      have_shifted = true;
    }
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : compare(a[i].m, shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), Rational(-c * b[j].c)});
      have_shifted = false;
      ++j;
    } else {
      Rational v = a[i].c - c * b[j].c;
      if (v != 0) out.push_back({a[i].m, std::move(v)});
      have_shifted = false;
      ++i;
      ++j;
    }
  }
  return out;
}

DPoly Ring::mul_mono(const DPoly& a, const Mono& m) const {
  DPoly out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({mono_mul(t.m, m), t.c});
  return out;
}

DPoly Ring::mul(const DPoly& a, const DPoly& b) const {
  DPoly out;
  for (const auto& t : b) {
    DPoly shifted = mul_mono(a, t.m);
    for (auto& s : shifted) s.c *= t.c;
    out = add(out, shifted);
  }
  return out;
}

void Ring::make_monic(DPoly& p) const {
  if (p.empty() || p.front().c == 1) return;
  Rational inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

DPoly Ring::reduce(DPoly p, const std::vector<const DPoly*>& divisors, std::size_t max_terms) const {
  DPoly remainder;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term& lead = p[head];
    const DPoly* found = nullptr;
    for (const DPoly* g : divisors) {
      if (divides(g->front().m, lead.m)) {
        found = g;
        break;
      }
    }
    if (found == nullptr) {
      remainder.push_back(lead);
      ++head;
      continue;
    }
    Rational c = lead.c / found->front().c;
    Mono shift = mono_div(lead.m, found->front().m);
    p = sub_mul(p, c, shift, *found, head + 1, 1);
    head = 0;
    if (max_terms != 0 && p.size() + remainder.size() > max_terms) {
      throw Error(ErrorKind::ResourceLimit, "polynomial exceeded " + std::to_string(max_terms) + " terms");
    }
  }
  return remainder;
}

}  // namespace tracefree::detail
