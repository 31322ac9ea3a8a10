#pragma once

#include <cstdint>
#include <vector>

#include "tracefree/rational.hpp"
#include "tracefree/upoly.hpp"

namespace tracefree {

struct RootOptions {
  /// Working precision of the final Newton refinement. 64 keeps everything
  /// in long double; larger values refine with GMP floats before rounding.
  int precision_bits = 64;
  /// Total Aberth iteration budget across restarts.
  int max_iterations = 200;
  std::uint64_t seed = 1;
};

/// All complex roots of the square-free part of p, sorted by (re, im).
/// Rational roots are found exactly and carry their exact value.
/// Throws Error{ResourceLimit} if the simultaneous iteration does not settle.
std::vector<ComplexValue> univariate_roots(const UPoly& p, const RootOptions& options = {});

/// Aberth-Ehrlich simultaneous iteration on a polynomial with complex
/// coefficients (index = power) that is assumed square-free.
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, const RootOptions& options = {});

/// Canonical ordering for complex values: real part, then imaginary part,
/// with differences below tol treated as ties.
bool complex_less(const Complex& a, const Complex& b, Real tol = 1e-9L);

}  // namespace tracefree
