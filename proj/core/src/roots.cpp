#include "tracefree/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "tracefree/error.hpp"

namespace tracefree {

namespace {

constexpr Real kEps = std::numeric_limits<Real>::epsilon();

struct Horner {
  Complex value;
  Complex derivative;
  Real error_bound;  // rounding-error bound for value
};

Horner horner(const std::vector<Complex>& a, const Complex& z) {
  Complex p = a.back();
  Complex dp(0.0L, 0.0L);
  Real abs_z = std::abs(z);
  Real bound = std::abs(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    bound = bound * abs_z + std::abs(a[i]);
  }
  return {p, dp, bound * 8 * kEps};
}

// Newton refinement with GMP floats at the requested precision.
Complex refine_high_precision(const std::vector<Rational>& coeffs, Complex z, int bits) {
  const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(bits);
  std::vector<mpf_class> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.emplace_back(q, prec);
  mpf_class re(static_cast<double>(z.real()), prec), im(static_cast<double>(z.imag()), prec);
  re += mpf_class(static_cast<double>(z.real() - static_cast<Real>(static_cast<double>(z.real()))), prec);
  im += mpf_class(static_cast<double>(z.imag() - static_cast<Real>(static_cast<double>(z.imag()))), prec);
  for (int iter = 0; iter < 8; ++iter) {
    mpf_class pr(0, prec), pi(0, prec), dr(0, prec), di(0, prec);
    for (std::size_t i = c.size(); i-- > 0;) {
      // d = d*z + p ; p = p*z + c_i
      mpf_class ndr(dr * re - di * im + pr, prec);
      mpf_class ndi(dr * im + di * re + pi, prec);
      dr = ndr;
      di = ndi;
      mpf_class npr(pr * re - pi * im + c[i], prec);
      mpf_class npi(pr * im + pi * re, prec);
      pr = npr;
      pi = npi;
    }
    mpf_class den(dr * dr + di * di, prec);
    if (den == 0) break;
    mpf_class stepr((pr * dr + pi * di) / den, prec);
    mpf_class stepi((pi * dr - pr * di) / den, prec);
    re -= stepr;
    im -= stepi;
  }
  auto to_real_mpf = [prec](const mpf_class& f) {
    double hi = f.get_d();
    mpf_class rest(f - hi, prec);
    return static_cast<Real>(hi) + static_cast<Real>(rest.get_d());
  };
  return {to_real_mpf(re), to_real_mpf(im)};
}

std::vector<Integer> divisors_of(const Integer& value) {
  Integer v = abs(value);
  std::vector<Integer> out;
  if (v == 0 || v > Integer("1000000000000")) return out;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

std::optional<Rational> exact_rational_root(const UPoly& p, const std::vector<Integer>& denominators, Real x) {
  std::vector<Integer> dens = denominators;
  if (dens.empty()) dens.push_back(1);
  for (const auto& den : dens) {
    Real scaled = x * static_cast<Real>(den.get_d());
    if (std::fabs(scaled) > 1e18L) continue;
    Integer num(static_cast<long>(std::llround(scaled)));
    Rational candidate(num, den);
    candidate.canonicalize();
    if (std::fabs(to_real(candidate) - x) > 1e-6L * std::max<Real>(1, std::fabs(x))) continue;
    if (p(candidate) == 0) return candidate;
  }
  return std::nullopt;
}

}  // namespace

bool complex_less(const Complex& a, const Complex& b, Real tol) {
  if (std::fabs(a.real() - b.real()) > tol) return a.real() < b.real();
  if (std::fabs(a.imag() - b.imag()) > tol) return a.imag() < b.imag();
  return false;
}

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, const RootOptions& options) {
  std::vector<Complex> a = coeffs;
  while (!a.empty() && a.back() == Complex(0.0L, 0.0L)) a.pop_back();
  if (a.size() <= 1) return {};
  const std::size_t n = a.size() - 1;
  if (n == 1) return {-a[0] / a[1]};

  // Cauchy bound on root moduli.
  Real radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i] / a[n]));
  radius = std::min<Real>(1 + radius, 1e6L);
  Real lower = 0;
  if (std::abs(a[0]) > 0) {
    // Start on a circle scaled to the geometric mean of the root moduli.
    lower = std::pow(std::abs(a[0] / a[n]), 1.0L / static_cast<Real>(n));
  }
  Real start_radius = lower > 0 ? std::min(lower, radius) : radius / 2;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = 2 * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(n) + 0.4L;
    z[k] = std::polar(start_radius, angle);
  }

  std::vector<bool> done(n, false);
  int since_progress = 0;
  std::size_t best_done = 0;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      Horner h = horner(a, z[k]);
      if (std::abs(h.value) <= h.error_bound) {
        done[k] = true;
        continue;
      }
      Complex ratio = h.value / h.derivative;
      Complex sum(0.0L, 0.0L);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      Complex step = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        step = Complex(static_cast<Real>(jitter(rng)), static_cast<Real>(jitter(rng))) * (1e-3L + std::abs(z[k]));
      }
      z[k] -= step;
      if (std::abs(step) <= 4 * kEps * std::max<Real>(1, std::abs(z[k]))) done[k] = true;
    }
    std::size_t count = static_cast<std::size_t>(std::count(done.begin(), done.end(), true));
    if (count == n) return z;
    if (count > best_done) {
      best_done = count;
      since_progress = 0;
    } else if (++since_progress > 40) {
      // Stagnation: shake the unconverged estimates.
      for (std::size_t k = 0; k < n; ++k) {
        if (!done[k]) {
          z[k] += Complex(static_cast<Real>(jitter(rng)), static_cast<Real>(jitter(rng))) *
                  (1e-2L * std::max<Real>(1, std::abs(z[k])));
        }
      }
      since_progress = 0;
    }
  }
  throw Error(ErrorKind::ResourceLimit, "root finder did not converge in " + std::to_string(options.max_iterations) +
                                            " iterations");
}

std::vector<ComplexValue> univariate_roots(const UPoly& p, const RootOptions& options) {
  if (p.is_zero()) throw Error(ErrorKind::MalformedInput, "roots of the zero polynomial");
  UPoly q = square_free_part(p);
  if (q.degree() < 1) return {};

  std::vector<Integer> ints = q.primitive_integer();
  UPoly qi([&] {
    std::vector<Rational> c;
    for (const auto& v : ints) c.emplace_back(v);
    return c;
  }());
  std::vector<Integer> dens = divisors_of(ints.back());
  std::sort(dens.begin(), dens.end());

  std::vector<Complex> coeffs;
  for (const auto& v : qi.coeffs()) coeffs.push_back(to_real(v));
  std::vector<Complex> approx = aberth_roots(coeffs, options);

  std::vector<ComplexValue> roots;
  for (std::size_t idx = 0; idx < approx.size(); ++idx) {
    Complex z = approx[idx];
    // A couple of Newton steps in long double.
    for (int iter = 0; iter < 3; ++iter) {
      Horner h = horner(coeffs, z);
      if (h.derivative == Complex(0.0L, 0.0L) || std::abs(h.value) <= h.error_bound) break;
      z -= h.value / h.derivative;
    }
    if (options.precision_bits > 64) z = refine_high_precision(qi.coeffs(), z, options.precision_bits);
    // Real coefficients: a root that is its own nearest conjugate partner is real.
    if (z.imag() != 0) {
      Complex c = std::conj(z);
      bool self = true;
      for (std::size_t other = 0; other < approx.size(); ++other) {
        if (other != idx && std::abs(approx[other] - c) < std::abs(z - c)) self = false;
      }
      if (self && std::fabs(z.imag()) < 1e-6L * std::max<Real>(1, std::abs(z))) z = Complex(z.real(), 0);
    }
    Real scale = std::max<Real>(1, std::abs(z));
    if (std::fabs(z.imag()) < 1e-6L * scale) {
      if (auto exact = exact_rational_root(qi, dens, z.real())) {
        roots.emplace_back(*exact);
        continue;
      }
    }
    roots.emplace_back(z);
  }
  // Pair each upper half-plane root with its nearest lower partner and make
  // them exact conjugates, so that equal real parts sort deterministically.
  std::vector<bool> paired(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].is_exact() || roots[i].im() <= 0) continue;
    std::size_t best = roots.size();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (paired[j] || roots[j].is_exact() || roots[j].im() >= 0) continue;
      if (best == roots.size() ||
          std::abs(roots[j].value - std::conj(roots[i].value)) < std::abs(roots[best].value - std::conj(roots[i].value))) {
        best = j;
      }
    }
    if (best == roots.size()) continue;
    paired[best] = true;
    Complex mid((roots[i].re() + roots[best].re()) / 2, (roots[i].im() - roots[best].im()) / 2);
    roots[i] = ComplexValue(mid);
    roots[best] = ComplexValue(std::conj(mid));
  }
  std::sort(roots.begin(), roots.end(),
            [](const ComplexValue& x, const ComplexValue& y) { return complex_less(x.value, y.value, 0); });
  return roots;
}

}  // namespace tracefree
