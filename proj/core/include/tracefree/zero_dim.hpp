#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tracefree/groebner.hpp"
#include "tracefree/relations.hpp"
#include "tracefree/roots.hpp"
#include "tracefree/upoly.hpp"

namespace tracefree {

struct SolveOptions {
  GroebnerOptions groebner;
  RootOptions roots;
  /// Clustering radius and residual threshold.
  Real tolerance = 1e-9L;
  /// Variable whose eliminant is reported. Defaults to the variable that
  /// occurs in the most generators.
  std::optional<VarKey> parameter;
  /// Upper bound on the dimension of the quotient algebra.
  std::size_t max_quotient = 5000;
  /// Seed for the random separating linear form (used only when the
  /// parameter alone does not separate the points).
  std::uint64_t seed = 1;
};

/// Solution set of a polynomial system.
struct Variety {
  /// Krull dimension, -1 for the empty set.
  int dimension = -1;
  /// Distinct solutions, sorted canonically. Empty unless dimension is 0.
  std::vector<Assignment> points;
  VarKey eliminant_variable;
  /// Monic square-free univariate polynomial whose roots are the values of
  /// eliminant_variable over the points.
  UPoly eliminant;
  /// Largest |g(p)| over input generators g and points p.
  Real max_residual = 0;
  /// Length of the original quotient algebra (counts points with multiplicity).
  std::size_t multiplicity = 0;
  /// S-pairs reduced over all Groebner computations.
  std::size_t groebner_pairs = 0;
};

/// Variable that occurs in the largest number of generators, smallest key on ties.
VarKey default_parameter(const Ideal& ideal);

/// Finds every complex solution of a zero-dimensional system. The ideal is
/// replaced by its radical, a separating linear form u is chosen and each
/// variable is written as a polynomial in u; the roots of the minimal
/// polynomial of u then give the points. Coordinates that are roots of a
/// rational linear factor of their own minimal polynomial are returned exactly.
/// Throws NotZeroDimensionalError, Error{ResourceLimit}.
Variety solve_zero_dim(const Ideal& ideal, const SolveOptions& options = {});

/// Canonical ordering of points: coordinates compared in key order with
/// complex_less.
bool point_less(const Assignment& a, const Assignment& b, Real tol = 1e-9L);

/// max |value - other| over shared keys.
Real point_distance(const Assignment& a, const Assignment& b);

}  // namespace tracefree
