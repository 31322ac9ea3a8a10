#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tracefree/diagram.hpp"
#include "tracefree/zero_dim.hpp"

namespace tracefree {

/// A point of the trace-free slice: pair coordinates x_ij and triple
/// coordinates x_ijk.
struct S0Point {
  Assignment pairs;
  Assignment triples;

  /// Pairs and triples in one assignment.
  Assignment merged() const;
};

enum class GhostReason { Rectangle, Hexagon };

std::string to_string(GhostReason reason);

struct LiftResult {
  /// Zero, one (all triple coordinates vanish) or two sign-conjugate lifts.
  std::vector<S0Point> lifts;
  std::optional<GhostReason> ghost;
  /// Largest rectangle determinant at the point.
  Real rectangle_residual = 0;
  /// Largest hexagon defect of the lifted point; for a hexagon ghost, the
  /// defect of the best candidate.
  Real hexagon_residual = 0;
  /// Index triple used as the square-root pivot, if any.
  std::optional<std::array<int, 3>> pivot;

  /// "lifts:1", "lifts:2", "ghost(rectangle)" or "ghost(hexagon)".
  std::string status() const;
};

struct F2Point {
  Assignment coords;
  std::optional<LiftResult> lift;
};

struct SliceOptions {
  SolveOptions solve;
  /// Residual threshold for rectangle and hexagon judgments.
  Real tolerance = 1e-9L;
  /// Fixed pivot triple for lifting (sorted indices). By default the triple
  /// with the largest |D_T| is used.
  std::optional<std::array<int, 3>> pivot;
};

struct F2Result {
  Variety variety;
  std::vector<F2Point> points;
};

struct S0Result {
  /// The underlying F2 points, each with its lift filled in.
  F2Result f2;
  /// Union of all lifts, sorted canonically.
  std::vector<S0Point> points;
};

/// Solves the fundamental relations of the diagram.
/// Throws NotZeroDimensionalError, Error{ResourceLimit}.
F2Result compute_f2(const Diagram& d, const SliceOptions& options = {});

/// Lifts an F2 point through the hexagon and rectangle relations.
LiftResult lift_point(const Assignment& pairs, int n, Real tol = 1e-9L,
                      const std::optional<std::array<int, 3>>& pivot = std::nullopt);

/// compute_f2 followed by lift_point on every point.
S0Result compute_s0(const Diagram& d, const SliceOptions& options = {});

/// F2 points that do not lift, with the reason.
std::vector<std::pair<F2Point, GhostReason>> find_ghosts(const Diagram& d, const SliceOptions& options = {});

/// Largest |det| over all principal 4x4 minors of the pair Gram matrix and
/// all minors with rows {i,j,k,b} and columns {i,j,k,a}.
Real verify_sister_rectangles(const S0Point& p, int n);

/// Largest |g(p)| over the triple-coordinate relations of the diagram.
Real f3_residual(const Diagram& d, const S0Point& p);

/// Largest hexagon defect |x_S x_T - 1/2 det| over all triple pairs.
Real hexagon_residual(const S0Point& p, int n);

struct CoverPoint {
  Assignment z_pair;
  Assignment z_quad;
};

/// z_ab = x_ab and z_1cde = 1/2 (x_1c x_de + x_1e x_cd - x_1d x_ce).
/// Only pair coordinates are read.
CoverPoint phi_hat(const Assignment& pairs, int n);

/// Solves pair and triple relations together in one system. Intended for
/// small diagrams as an independent check on compute_s0.
Variety s0_direct(const Diagram& d, const SolveOptions& options = {});

/// Splits a solution of s0_direct into pair and triple parts.
S0Point to_s0_point(const Assignment& a);

/// Canonical S0 ordering (pairs first, then triples).
bool s0_less(const S0Point& a, const S0Point& b, Real tol = 1e-9L);

}  // namespace tracefree
