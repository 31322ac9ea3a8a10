#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracefree/diagram.hpp"
#include "tracefree/smith.hpp"

namespace tracefree {

/// One letter g^power of a group word. `symbol` names the generator family:
/// 'm' for meridians, 'a' for m_1 m_i and 'b' for m_i m_1^-1.
struct Letter {
  char symbol = 'm';
  int index = 0;
  int power = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation {
  /// Generators in column order for abelianization.
  std::vector<Letter> generators;
  std::vector<Word> relators;
};

/// "a2 a3^-1 a2"; the empty word prints as "1".
std::string to_string(const Word& w);
Word parse_word(const std::string& text);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word w);

/// m_i m_j m_i^-1 m_k^-1 for each triple (i, j, k), omitting the relator of
/// the triple at position `drop` (1-based). The default drops the last one.
GroupPresentation wirtinger_presentation(const Diagram& d, std::optional<std::size_t> drop = std::nullopt);

/// Rewrites a word of even length in the meridians as a word in the
/// generators of the index-two subgroup, using the transversal {1, m_1}.
/// With quotient = true the result lives in the fundamental group of the
/// 2-fold branched cover (m_1^2 = 1), where every letter becomes a_i^-1 at
/// even positions and a_i at odd positions and a_1 disappears. Otherwise the
/// Schreier generators a_i = m_1 m_i and b_i = m_i m_1^-1 are kept apart.
/// Throws Error{OddParity}.
Word fox_rewrite(const Word& w, bool quotient = true);

/// Generators a_2..a_n; relators w(r_j) and w(m_1 r_j m_1^-1) for each kept
/// Wirtinger relator r_j.
GroupPresentation fox_presentation(const Diagram& d, std::optional<std::size_t> drop = std::nullopt);

/// Invariant factors of the abelianized group: torsion orders above 1, then a
/// 0 per free summand.
std::vector<Integer> abelianization(const GroupPresentation& p);

}  // namespace tracefree
