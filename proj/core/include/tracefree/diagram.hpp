#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tracefree {

/// Crossing data of a knot diagram: arc `over` passes over the crossing and
/// arcs `under_a`, `under_b` end/start there. Indices are 1-based. The
/// Wirtinger relation m_i m_j m_i^-1 m_k^-1 is used symmetrically in the two
/// under-arcs, so they are stored sorted.
struct WirtingerTriple {
  int over = 0;
  int under_a = 0;
  int under_b = 0;

  WirtingerTriple() = default;
  WirtingerTriple(int i, int j, int k);

  friend bool operator==(const WirtingerTriple&, const WirtingerTriple&) = default;
  friend auto operator<=>(const WirtingerTriple&, const WirtingerTriple&) = default;
};

/// A knot diagram given by one Wirtinger triple per crossing.
///
/// A valid diagram with n crossings has n arcs; every arc index 1..n occurs
/// exactly twice among the under-arc slots, once where the arc begins and once
/// where it ends.
struct Diagram {
  int n = 0;
  std::vector<WirtingerTriple> triples;
  std::string label;
};

/// One planar-diagram crossing X[a,b,c,d]. Entries are edge labels listed
/// counterclockwise starting from the incoming under-strand, so a -> c is the
/// under-strand and b, d lie on the over-strand.
struct PdCrossing {
  std::array<int, 4> labels{};
};

/// Parses "i j k" lines or a "(i,j,k),(i,j,k),..." list. '#' starts a comment.
/// Throws Error{MalformedInput, IndexOutOfRange, ArcDegreeViolation}.
Diagram parse_triples(std::string_view text, std::string label = {});

/// Parses "X[a,b,c,d]" tokens and converts them to Wirtinger triples. Arcs are
/// numbered by first appearance when walking the edge labels in increasing
/// order. Throws Error{MalformedInput, InconsistentStrands}.
Diagram parse_pd(std::string_view text, std::string label = {});

/// Converts parsed PD crossings into a diagram. Same errors as parse_pd.
Diagram diagram_from_pd(const std::vector<PdCrossing>& crossings, std::string label = {});

/// Reads a diagram file; a file containing "X[" is treated as PD code.
Diagram load_diagram_file(const std::string& path);

/// Enforces the Diagram invariants. Throws on violation.
void validate(const Diagram& d);

/// One "i j k" line per triple; inverse of parse_triples.
std::string render_triples(const Diagram& d);

/// Relabels arcs: arc a becomes perm[a-1]. perm must be a permutation of 1..n.
Diagram relabel(const Diagram& d, const std::vector<int>& perm);

}  // namespace tracefree
