#include "tracefree/cover.hpp"

#include <cctype>
#include <sstream>

#include "tracefree/error.hpp"

namespace tracefree {

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.symbol;
    out += std::to_string(l.index);
    if (l.power != 1) out += "^" + std::to_string(l.power);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::size_t pos = 1;
    if (tok.size() < 2 || (tok[0] != 'm' && tok[0] != 'a' && tok[0] != 'b')) {
      throw Error(ErrorKind::MalformedInput, "bad letter '" + tok + "'");
    }
    Letter l;
    l.symbol = tok[0];
    std::size_t caret = tok.find('^');
    try {
      l.index = std::stoi(tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos));
      if (caret != std::string::npos) l.power = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedInput, "bad letter '" + tok + "'");
    }
    if (l.power == 0) continue;
    w.push_back(l);
  }
  return free_reduce(w);
}

Word free_reduce(Word w) {
  Word out;
  for (auto& l : w) {
    if (!out.empty() && out.back().symbol == l.symbol && out.back().index == l.index) {
      out.back().power += l.power;
      if (out.back().power == 0) out.pop_back();
      continue;
    }
    if (l.power != 0) out.push_back(l);
  }
  return out;
}

namespace {

Word relator(const WirtingerTriple& t) {
  return {{'m', t.over, 1}, {'m', t.under_a, 1}, {'m', t.over, -1}, {'m', t.under_b, -1}};
}

std::size_t dropped_index(const Diagram& d, std::optional<std::size_t> drop) {
  std::size_t k = drop.value_or(d.triples.size());
  if (k < 1 || k > d.triples.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "dropped relator " + std::to_string(k) + " outside 1.." +
                                                std::to_string(d.triples.size()));
  }
  return k;
}

}  // namespace

GroupPresentation wirtinger_presentation(const Diagram& d, std::optional<std::size_t> drop) {
  GroupPresentation p;
  for (int i = 1; i <= d.n; ++i) p.generators.push_back({'m', i, 1});
  if (d.triples.empty()) return p;
  std::size_t skip = dropped_index(d, drop);
  for (std::size_t r = 0; r < d.triples.size(); ++r) {
    if (r + 1 != skip) p.relators.push_back(relator(d.triples[r]));
  }
  return p;
}

Word fox_rewrite(const Word& w, bool quotient) {
  // Expand powers so each step moves by one letter.
  Word letters;
  long parity = 0;
  for (const auto& l : w) {
    if (l.symbol != 'm') throw Error(ErrorKind::MalformedInput, "only meridian letters can be rewritten");
    int step = l.power > 0 ? 1 : -1;
    for (int e = 0; e != l.power; e += step) letters.push_back({'m', l.index, step});
    parity += l.power;
  }
  if (parity % 2 != 0) throw Error(ErrorKind::OddParity, "word " + to_string(w) + " has odd length");

  Word out;
  int state = 0;
  for (const auto& l : letters) {
    if (quotient) {
      if (l.index != 1) out.push_back({'a', l.index, state == 0 ? -1 : 1});
    } else if (state == 0) {
      // m_i -> m_i m_1^-1 = b_i,  m_i^-1 -> (m_1 m_i)^-1 = a_i^-1
      if (l.power > 0) {
        if (l.index != 1) out.push_back({'b', l.index, 1});
      } else {
        out.push_back({'a', l.index, -1});
      }
    } else {
      // m_i -> m_1 m_i = a_i,  m_i^-1 -> m_1 m_i^-1 = b_i^-1
      if (l.power > 0) {
        out.push_back({'a', l.index, 1});
      } else if (l.index != 1) {
        out.push_back({'b', l.index, -1});
      }
    }
    state ^= 1;
  }
  return free_reduce(out);
}

GroupPresentation fox_presentation(const Diagram& d, std::optional<std::size_t> drop) {
  GroupPresentation p;
  for (int i = 2; i <= d.n; ++i) p.generators.push_back({'a', i, 1});
  for (const auto& r : wirtinger_presentation(d, drop).relators) {
    p.relators.push_back(fox_rewrite(r));
    Word conj;
    conj.push_back({'m', 1, 1});
    conj.insert(conj.end(), r.begin(), r.end());
    conj.push_back({'m', 1, -1});
    p.relators.push_back(fox_rewrite(conj));
  }
  return p;
}

std::vector<Integer> abelianization(const GroupPresentation& p) {
  IntMatrix m;
  for (const auto& r : p.relators) {
    std::vector<Integer> row(p.generators.size(), 0);
    for (const auto& l : r) {
      bool found = false;
      for (std::size_t g = 0; g < p.generators.size(); ++g) {
        if (p.generators[g].symbol == l.symbol && p.generators[g].index == l.index) {
          row[g] += l.power;
          found = true;
        }
      }
      if (!found) throw Error(ErrorKind::MalformedInput, "relator uses undeclared generator");
    }
    m.push_back(std::move(row));
  }
  return cokernel_invariants(m, p.generators.size());
}

}  // namespace tracefree
