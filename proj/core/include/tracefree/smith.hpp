#pragma once

#include <vector>

#include "tracefree/rational.hpp"

namespace tracefree {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Diagonal of the Smith normal form: d_1 | d_2 | ... | d_r, all nonnegative,
/// one entry per min(rows, cols). Rows may have different lengths only if
/// empty; a ragged matrix throws Error{NonSquare}.
std::vector<Integer> smith_normal_form(IntMatrix m);

/// Abelian group Z^cols / (row span), as invariant factors with the 1s
/// dropped and a 0 for each free summand.
std::vector<Integer> cokernel_invariants(const IntMatrix& relations, std::size_t generators);

}  // namespace tracefree
