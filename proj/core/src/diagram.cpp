#include "tracefree/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "tracefree/error.hpp"

namespace tracefree {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ArcDegreeViolation: return "ArcDegreeViolation";
    case ErrorKind::InconsistentStrands: return "InconsistentStrands";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::ForeignVariable: return "ForeignVariable";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::OddParity: return "OddParity";
  }
  return "Unknown";
}

WirtingerTriple::WirtingerTriple(int i, int j, int k)
    : over(i), under_a(std::min(j, k)), under_b(std::max(j, k)) {}

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (!in_comment) out.push_back(c);
  }
  return out;
}

// Splits on anything that is not part of a (possibly signed) integer and
// rejects stray characters other than the punctuation of the two formats.
std::vector<int> integer_tokens(std::string_view text, std::string_view allowed_punct) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || allowed_punct.find(c) != std::string_view::npos) {
      ++pos;
      continue;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      std::string_view token = text.substr(pos, end - pos);
      if (token[0] == '+') token.remove_prefix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::MalformedInput, "bad integer token '" + std::string(text.substr(pos, end - pos)) + "'");
      }
      values.push_back(value);
      pos = end;
      continue;
    }
    throw Error(ErrorKind::MalformedInput, std::string("unexpected character '") + c + "'");
  }
  return values;
}

struct DisjointSets {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int root = find(it->second);
    parent[x] = root;
    return root;
  }
  void unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
};

}  // namespace

void validate(const Diagram& d) {
  if (d.n < 1) throw Error(ErrorKind::MalformedInput, "diagram has no crossings");
  std::vector<int> degree(d.n + 1, 0);
  for (const auto& t : d.triples) {
    for (int idx : {t.over, t.under_a, t.under_b}) {
      if (idx < 1 || idx > d.n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "arc index " + std::to_string(idx) + " outside 1.." + std::to_string(d.n));
      }
    }
    if (t.under_a > t.under_b) throw Error(ErrorKind::MalformedInput, "under-arcs not sorted");
    ++degree[t.under_a];
    ++degree[t.under_b];
  }
  for (int a = 1; a <= d.n; ++a) {
    if (degree[a] != 2) {
      throw Error(ErrorKind::ArcDegreeViolation, "arc " + std::to_string(a) + " appears " +
                                                     std::to_string(degree[a]) +
                                                     " times among under-arc slots (expected 2)");
    }
  }
}

Diagram parse_triples(std::string_view text, std::string label) {
  std::vector<int> values = integer_tokens(strip_comments(text), "(),;[]");
  if (values.empty()) throw Error(ErrorKind::MalformedInput, "no triples found");
  if (values.size() % 3 != 0) {
    throw Error(ErrorKind::MalformedInput, "number of integers is not a multiple of 3");
  }
  Diagram d;
  d.n = static_cast<int>(values.size() / 3);
  d.label = std::move(label);
  for (std::size_t t = 0; t < values.size(); t += 3) {
    d.triples.emplace_back(values[t], values[t + 1], values[t + 2]);
  }
  validate(d);
  return d;
}

Diagram diagram_from_pd(const std::vector<PdCrossing>& crossings, std::string label) {
  if (crossings.empty()) throw Error(ErrorKind::MalformedInput, "empty crossing list");

  std::map<int, int> occurrences;
  for (const auto& x : crossings) {
    for (int l : x.labels) ++occurrences[l];
  }
  for (const auto& [l, count] : occurrences) {
    if (count != 2) {
      throw Error(ErrorKind::InconsistentStrands,
                  "edge label " + std::to_string(l) + " occurs " + std::to_string(count) + " times");
    }
  }

  // Components of the knot: a strand continues a -> c and b -> d.
  DisjointSets strands;
  // Arcs: maximal over-strands; b and d belong to the same arc.
  DisjointSets arcs;
  for (const auto& x : crossings) {
    strands.unite(x.labels[0], x.labels[2]);
    strands.unite(x.labels[1], x.labels[3]);
    arcs.unite(x.labels[1], x.labels[3]);
    arcs.find(x.labels[0]);
    arcs.find(x.labels[2]);
  }
  int root = strands.find(occurrences.begin()->first);
  for (const auto& [l, count] : occurrences) {
    if (strands.find(l) != root) {
      throw Error(ErrorKind::InconsistentStrands, "strands do not close up into one component");
    }
  }

  std::map<int, int> arc_number;
  for (const auto& [l, count] : occurrences) {
    int r = arcs.find(l);
    if (!arc_number.contains(r)) {
      int next = static_cast<int>(arc_number.size()) + 1;
      arc_number[r] = next;
    }
  }
  int n = static_cast<int>(crossings.size());
  if (static_cast<int>(arc_number.size()) != n) {
    throw Error(ErrorKind::InconsistentStrands, "diagram has " + std::to_string(arc_number.size()) +
                                                    " arcs but " + std::to_string(n) + " crossings");
  }

  Diagram d;
  d.n = n;
  d.label = std::move(label);
  for (const auto& x : crossings) {
    auto arc = [&](int l) { return arc_number.at(arcs.find(l)); };
    d.triples.emplace_back(arc(x.labels[1]), arc(x.labels[0]), arc(x.labels[2]));
  }
  try {
    validate(d);
  } catch (const Error& e) {
    throw Error(ErrorKind::InconsistentStrands, e.what());
  }
  return d;
}

Diagram parse_pd(std::string_view text, std::string label) {
  std::string body = strip_comments(text);
  std::vector<PdCrossing> crossings;
  std::size_t pos = 0;
  while (true) {
    std::size_t x = body.find_first_not_of(" \t\r\n,;", pos);
    if (x == std::string::npos) break;
    if (body.compare(x, 2, "X[") != 0) {
      throw Error(ErrorKind::MalformedInput, "expected 'X[' at offset " + std::to_string(x));
    }
    std::size_t close = body.find(']', x);
    if (close == std::string::npos) throw Error(ErrorKind::MalformedInput, "unterminated crossing");
    std::vector<int> values = integer_tokens(std::string_view(body).substr(x + 2, close - x - 2), ",");
    if (values.size() != 4) {
      throw Error(ErrorKind::MalformedInput, "crossing must have 4 labels");
    }
    PdCrossing c;
    std::copy(values.begin(), values.end(), c.labels.begin());
    for (int l : c.labels) {
      if (l < 1) throw Error(ErrorKind::MalformedInput, "PD labels must be positive");
    }
    crossings.push_back(c);
    pos = close + 1;
  }
  return diagram_from_pd(crossings, std::move(label));
}

Diagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::string label = path;
  if (auto slash = label.find_last_of('/'); slash != std::string::npos) label = label.substr(slash + 1);
  if (auto dot = label.find_last_of('.'); dot != std::string::npos) label = label.substr(0, dot);
  if (strip_comments(text).find("X[") != std::string::npos) return parse_pd(text, label);
  return parse_triples(text, label);
}

std::string render_triples(const Diagram& d) {
  std::ostringstream out;
  for (const auto& t : d.triples) out << t.over << ' ' << t.under_a << ' ' << t.under_b << '\n';
  return out.str();
}

Diagram relabel(const Diagram& d, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != d.n) {
    throw Error(ErrorKind::MalformedInput, "relabeling has wrong size");
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int a = 0; a < d.n; ++a) {
    if (sorted[a] != a + 1) throw Error(ErrorKind::MalformedInput, "relabeling is not a permutation");
  }
  Diagram out;
  out.n = d.n;
  out.label = d.label;
  for (const auto& t : d.triples) {
    out.triples.emplace_back(perm[t.over - 1], perm[t.under_a - 1], perm[t.under_b - 1]);
  }
  return out;
}

}  // namespace tracefree
