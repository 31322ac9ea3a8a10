#include "tracefree/representation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

namespace tracefree {

namespace {

using cd = std::complex<double>;
using Vec3 = std::array<cd, 3>;

const cd kI{0.0, 1.0};

struct M2 {
  cd a, b, c, d;
};

M2 operator*(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

M2 from_vector(const Vec3& v) { return {kI * v[0], v[1] + kI * v[2], -v[1] + kI * v[2], -kI * v[0]}; }

cd trace(const M2& m) { return m.a + m.d; }

// The system to satisfy, with the first meridian fixed to diag(i, -i).
class Problem {
 public:
  Problem(const Diagram& d, const S0Point& p) : d_(d) {
    const int n = d.n;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        pairs_.push_back({i, j, to_cd(p.pairs.at(VarKey::pair(i, j)).value)});
        for (int k = j + 1; k <= n; ++k) {
          auto it = p.triples.find(VarKey::triple(i, j, k));
          if (it != p.triples.end()) triples_.push_back({i, j, k, to_cd(it->second.value)});
        }
      }
  }

  int unknowns() const { return 3 * (d_.n - 1); }

  std::vector<Vec3> vectors(const Eigen::VectorXcd& x) const {
    std::vector<Vec3> v(static_cast<std::size_t>(d_.n));
    v[0] = {1.0, 0.0, 0.0};
    for (int i = 1; i < d_.n; ++i) v[static_cast<std::size_t>(i)] = {x(3 * (i - 1)), x(3 * (i - 1) + 1), x(3 * (i - 1) + 2)};
    return v;
  }

  Eigen::VectorXcd residual(const Eigen::VectorXcd& x) const {
    std::vector<Vec3> v = vectors(x);
    std::vector<M2> m;
    for (const auto& vi : v) m.push_back(from_vector(vi));
    std::vector<cd> r;
    for (std::size_t i = 1; i < v.size(); ++i) r.push_back(v[i][0] * v[i][0] + v[i][1] * v[i][1] + v[i][2] * v[i][2] - 1.0);
    for (const auto& t : d_.triples) {
      const M2& mi = m[static_cast<std::size_t>(t.over - 1)];
      M2 lhs = mi * m[static_cast<std::size_t>(t.under_a - 1)];
      M2 rhs = m[static_cast<std::size_t>(t.under_b - 1)] * mi;
      r.insert(r.end(), {lhs.a - rhs.a, lhs.b - rhs.b, lhs.c - rhs.c, lhs.d - rhs.d});
    }
    for (const auto& [i, j, x_ij] : pairs_) r.push_back(-trace(m[i - 1] * m[j - 1]) - x_ij);
    for (const auto& [i, j, k, x_ijk] : triples_) r.push_back(-trace(m[i - 1] * m[j - 1] * m[k - 1]) - x_ijk);
    return Eigen::Map<Eigen::VectorXcd>(r.data(), static_cast<Eigen::Index>(r.size()));
  }

  // Holomorphic residuals: central differences along real steps give the
  // complex derivative.
  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& x, const Eigen::VectorXcd& r0) const {
    Eigen::MatrixXcd j(r0.size(), x.size());
    const double h = 1e-6;
    for (Eigen::Index c = 0; c < x.size(); ++c) {
      Eigen::VectorXcd xp = x, xm = x;
      xp(c) += h;
      xm(c) -= h;
      j.col(c) = (residual(xp) - residual(xm)) / (2 * h);
    }
    return j;
  }

  // Triple-coordinate defect only, used to pick the orientation of a seed.
  double triple_defect(const std::vector<Vec3>& v) const {
    double worst = 0;
    for (const auto& [i, j, k, x_ijk] : triples_) {
      cd t = -trace(from_vector(v[i - 1]) * from_vector(v[j - 1]) * from_vector(v[k - 1]));
      worst = std::max(worst, std::abs(t - x_ijk));
    }
    return worst;
  }

 private:
  static cd to_cd(const Complex& z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

  struct PairTarget {
    int i, j;
    cd x;
  };
  struct TripleTarget {
    int i, j, k;
    cd x;
  };

  const Diagram& d_;
  std::vector<PairTarget> pairs_;
  std::vector<TripleTarget> triples_;
};

// Complex-symmetric factorization G/2 = V V^T with the first row pinned to
// e1. Pivots are chosen by largest remaining diagonal; an all-isotropic
// remainder is split with a 2x2 block.
std::vector<Vec3> gram_seed(const S0Point& p, int n) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        a(i, j) = 1.0;
      } else {
        Complex x = p.pairs.at(VarKey::pair(std::min(i, j) + 1, std::max(i, j) + 1)).value;
        a(i, j) = cd(static_cast<double>(x.real()), static_cast<double>(x.imag())) / 2.0;
      }
    }
  std::vector<Eigen::VectorXcd> cols;
  auto take = [&a, &cols](int p) {
    Eigen::VectorXcd l = a.col(p) / std::sqrt(a(p, p));
    a -= l * l.transpose();
    cols.push_back(l);
  };
  take(0);
  while (cols.size() < 3) {
    double scale = a.cwiseAbs().maxCoeff();
    if (scale < 1e-10) break;
    Eigen::Index p = 0;
    double best = a.diagonal().cwiseAbs().maxCoeff(&p);
    if (best > 1e-6 * scale) {
      take(static_cast<int>(p));
      continue;
    }
    if (cols.size() > 1) break;
    Eigen::Index r = 0, c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    cd off = a(r, c);
    Eigen::MatrixXcd block(2, 2);
    block << 1.0, kI, 1.0 / (2.0 * off), -kI / (2.0 * off);
    Eigen::MatrixXcd sides(n, 2);
    sides.col(0) = a.col(r);
    sides.col(1) = a.col(c);
    Eigen::MatrixXcd l = sides * block;
    a -= l * l.transpose();
    cols.push_back(l.col(0));
    cols.push_back(l.col(1));
  }
  std::vector<Vec3> v(static_cast<std::size_t>(n), Vec3{0.0, 0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < cols.size() && k < 3; ++k) v[static_cast<std::size_t>(i)][k] = cols[k](i);
  return v;
}

Eigen::VectorXcd pack(const std::vector<Vec3>& v) {
  Eigen::VectorXcd x(3 * (static_cast<Eigen::Index>(v.size()) - 1));
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) x(static_cast<Eigen::Index>(3 * (i - 1) + k)) = v[i][k];
  return x;
}

// Levenberg-Marquardt on the complex residual.
Eigen::VectorXcd polish(const Problem& prob, Eigen::VectorXcd x, int max_iterations, double target) {
  Eigen::VectorXcd r = prob.residual(x);
  double cost = r.squaredNorm();
  double lambda = 1e-6;
  for (int iter = 0; iter < max_iterations && r.cwiseAbs().maxCoeff() > target; ++iter) {
    Eigen::MatrixXcd j = prob.jacobian(x, r);
    Eigen::MatrixXcd normal = j.adjoint() * j;
    Eigen::VectorXcd grad = j.adjoint() * r;
    bool improved = false;
    for (int tries = 0; tries < 12 && !improved; ++tries) {
      Eigen::MatrixXcd damped = normal;
      damped.diagonal().array() += lambda * (1.0 + normal.diagonal().real().array());
      Eigen::VectorXcd step = damped.ldlt().solve(-grad);
      Eigen::VectorXcd trial = x + step;
      Eigen::VectorXcd rt = prob.residual(trial);
      double c = rt.squaredNorm();
      if (std::isfinite(c) && c < cost) {
        x = std::move(trial);
        r = std::move(rt);
        cost = c;
        lambda = std::max(lambda / 5, 1e-12);
        improved = true;
      } else {
        lambda *= 8;
      }
    }
    if (!improved) break;
  }
  return x;
}

}  // namespace

Real representation_residual(const Diagram& d, const S0Point& p, const std::vector<Mat2>& meridians) {
  auto mul = [](const Mat2& x, const Mat2& y) -> Mat2 {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  auto tr = [](const Mat2& x) { return x[0] + x[3]; };
  Real worst = 0;
  for (const auto& m : meridians) {
    worst = std::max(worst, std::abs(tr(m)));
    worst = std::max(worst, std::abs(m[0] * m[3] - m[1] * m[2] - Complex(1)));
  }
  for (const auto& t : d.triples) {
    const Mat2& mi = meridians[static_cast<std::size_t>(t.over - 1)];
    Mat2 lhs = mul(mi, meridians[static_cast<std::size_t>(t.under_a - 1)]);
    Mat2 rhs = mul(meridians[static_cast<std::size_t>(t.under_b - 1)], mi);
    for (int e = 0; e < 4; ++e) worst = std::max(worst, std::abs(lhs[e] - rhs[e]));
  }
  for (const auto& [key, value] : p.pairs) {
    Mat2 prod = mul(meridians[key.idx[0] - 1u], meridians[key.idx[1] - 1u]);
    worst = std::max(worst, std::abs(-tr(prod) - value.value));
  }
  for (const auto& [key, value] : p.triples) {
    Mat2 prod = mul(mul(meridians[key.idx[0] - 1u], meridians[key.idx[1] - 1u]), meridians[key.idx[2] - 1u]);
    worst = std::max(worst, std::abs(-tr(prod) - value.value));
  }
  return worst;
}

std::optional<MatrixRep> realize_representation(const Diagram& d, const S0Point& p, const RealizeOptions& options) {
  const int n = d.n;
  Problem prob(d, p);

  auto finish = [&](const Eigen::VectorXcd& x, int seed_index) -> std::optional<MatrixRep> {
    MatrixRep rep;
    rep.seed_index = seed_index;
    for (const auto& v : prob.vectors(x)) {
      M2 m = from_vector(v);
      rep.meridians.push_back({Complex(m.a.real(), m.a.imag()), Complex(m.b.real(), m.b.imag()),
                               Complex(m.c.real(), m.c.imag()), Complex(m.d.real(), m.d.imag())});
    }
    rep.residual = representation_residual(d, p, rep.meridians);
    if (rep.residual < options.tolerance) return rep;
    return std::nullopt;
  };

  if (n == 1) return finish(Eigen::VectorXcd(0), 0);

  const double target = std::min(1e-13, static_cast<double>(options.tolerance) * 1e-3);
  std::vector<Vec3> seed = gram_seed(p, n);
  std::vector<Vec3> mirrored = seed;
  for (auto& v : mirrored) v[2] = -v[2];
  if (prob.triple_defect(mirrored) < prob.triple_defect(seed)) seed = mirrored;
  if (auto rep = finish(polish(prob, pack(seed), options.max_iterations, target), 0)) return rep;

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int s = 1; s <= options.seeds; ++s) {
    std::vector<Vec3> v(static_cast<std::size_t>(n));
    v[0] = {1.0, 0.0, 0.0};
    for (int i = 1; i < n; ++i) {
      Vec3 w{cd(normal(rng), normal(rng)), cd(normal(rng), normal(rng)), cd(normal(rng), normal(rng))};
      cd norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
      for (auto& c : w) c /= norm;
      v[static_cast<std::size_t>(i)] = w;
    }
    if (auto rep = finish(polish(prob, pack(v), options.max_iterations, target), s)) return rep;
  }
  return std::nullopt;
}

}  // namespace tracefree
