#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tracefree/diagram.hpp"
#include "tracefree/slice.hpp"

namespace tracefree {

/// 2x2 complex matrix, row-major {a, b, c, d}.
using Mat2 = std::array<Complex, 4>;

struct MatrixRep {
  /// Image of meridian m_i at index i-1; the first one is diag(i, -i).
  std::vector<Mat2> meridians;
  Real residual = 0;
  /// 0 for the Gram seed, k > 0 for the k-th random restart.
  int seed_index = 0;
};

struct RealizeOptions {
  Real tolerance = 1e-8L;
  int max_iterations = 100;
  /// Number of random restarts after the deterministic seed.
  int seeds = 16;
  std::uint64_t seed = 1;
};

/// Searches for trace-free SL(2,C) matrices realizing the point: Wirtinger
/// relations, -tr(m_i m_j) = x_ij and -tr(m_i m_j m_k) = x_ijk. Starts from a
/// factorization of the pair Gram matrix and polishes with damped Newton
/// steps. nullopt means nothing was found, which does not rule out a
/// representation.
std::optional<MatrixRep> realize_representation(const Diagram& d, const S0Point& p,
                                                const RealizeOptions& options = {});

/// Largest defect of the matrices against the relations listed above, and
/// against tr = 0, det = 1.
Real representation_residual(const Diagram& d, const S0Point& p, const std::vector<Mat2>& meridians);

}  // namespace tracefree
