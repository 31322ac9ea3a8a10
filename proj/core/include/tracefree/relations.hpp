#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "tracefree/diagram.hpp"
#include "tracefree/poly.hpp"

namespace tracefree {

enum class Provenance { F2, F3, Hexagon, Rectangle, Kch, Custom };

std::string_view to_string(Provenance p);

/// Generator list over a declared set of variables. Exact duplicates and zero
/// polynomials are never stored.
struct Ideal {
  std::set<VarKey> ring;
  std::vector<Polynomial> generators;
  Provenance provenance = Provenance::Custom;

  /// Appends g unless it is zero or already present.
  void add(const Polynomial& g);
};

/// All C(n,2) pair variables.
std::set<VarKey> pair_ring(int n);
/// All C(n,3) triple variables.
std::set<VarKey> triple_ring(int n);

/// Union of generator lists (ring is the union too); provenance Custom.
Ideal combine(const std::vector<Ideal>& parts);

/// Fundamental relations x_ak - x_ij x_ai + x_aj for every triple and every a.
Ideal gen_f2(const Diagram& d);

/// Triple-coordinate relations x_bck - x_ij x_bci + x_bcj, b < c.
Ideal gen_f3(const Diagram& d);

/// x_S x_T - 1/2 det[x_{s t}] over unordered triple pairs {S, T}, S = T included.
Ideal gen_hexagon(int n);

/// Hexagon generator for one pair of index triples (not necessarily sorted).
Polynomial hexagon_generator(const std::array<int, 3>& s, const std::array<int, 3>& t, int n);

/// det of the 4x4 pair-coordinate matrix on rows/cols (1,2,a,b), 3 <= a < b <= n.
Ideal gen_rectangle(int n);

/// Pair-coordinate Gram matrix on the given index rows and columns.
std::vector<std::vector<Polynomial>> gram_block(const std::vector<int>& rows, const std::vector<int>& cols, int n);

/// Contact homology generators a_lj + a_lk + a_li a_ij with a_ll = -2.
Ideal gen_kch(const Diagram& d);

/// Substitutes a_ij -> -x_ij. Throws Error{ForeignVariable} on non-a variables.
Polynomial kch_to_f2(const Polynomial& p);

}  // namespace tracefree
