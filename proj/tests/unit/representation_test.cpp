#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tracefree/representation.hpp"
#include "tracefree/slice.hpp"

using namespace tracefree;

namespace {

S0Point uniform_point(int n, long pair_value) {
  S0Point p;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      p.pairs[VarKey::pair(i, j)] = ComplexValue::from_int(pair_value);
      for (int k = j + 1; k <= n; ++k) p.triples[VarKey::triple(i, j, k)] = ComplexValue::from_int(0);
    }
  }
  return p;
}

Complex trace(const Mat2& m) { return m[0] + m[3]; }

}  // namespace

TEST_CASE("trefoil representation with x = -1") {
  Diagram d = oracle::census("3_1");
  S0Point p = uniform_point(3, -1);
  auto rep = realize_representation(d, p);
  REQUIRE(rep);
  CHECK(rep->residual < 1e-8);
  REQUIRE(rep->meridians.size() == 3);
  const Mat2& m1 = rep->meridians[0];
  CHECK(std::abs(m1[0] - Complex(0, 1)) < 1e-12);
  CHECK(std::abs(m1[3] - Complex(0, -1)) < 1e-12);
  const Mat2& m2 = rep->meridians[1];
  Mat2 prod{m1[0] * m2[0] + m1[1] * m2[2], 0, 0, m1[2] * m2[1] + m1[3] * m2[3]};
  CHECK(std::abs(trace(prod) - Complex(1)) < 1e-9);
  CHECK(std::abs(m2[1] * m2[2] - Complex(-0.75)) < 1e-9);
}

TEST_CASE("abelian representation") {
  for (const auto& name : {"4_1", "5_2"}) {
    Diagram d = oracle::census(name);
    auto rep = realize_representation(d, uniform_point(d.n, 2));
    REQUIRE(rep);
    CHECK(rep->residual < 1e-12);
    for (const auto& m : rep->meridians) {
      for (int e = 0; e < 4; ++e) CHECK(std::abs(m[e] - rep->meridians[0][e]) < 1e-12);
    }
  }
}

TEST_CASE("every figure-eight slice point is a representation") {
  Diagram d = oracle::census("4_1");
  S0Result s0 = compute_s0(d);
  for (const auto& p : s0.points) {
    auto rep = realize_representation(d, p);
    REQUIRE(rep);
    CHECK(rep->residual < 1e-8);
    CHECK(representation_residual(d, p, rep->meridians) == doctest::Approx(static_cast<double>(rep->residual)));
  }
}

TEST_CASE("a point off the slice is not realized") {
  Diagram d = oracle::census("3_1");
  S0Point p = uniform_point(3, 5);
  RealizeOptions quick;
  quick.seeds = 2;
  CHECK_FALSE(realize_representation(d, p, quick));
}

TEST_CASE("residual detects broken relations") {
  Diagram d = oracle::census("3_1");
  std::vector<Mat2> same(3, Mat2{Complex(0, 1), 0, 0, Complex(0, -1)});
  CHECK(representation_residual(d, uniform_point(3, 2), same) < 1e-15);
  CHECK(representation_residual(d, uniform_point(3, -1), same) > 1);
}
