#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tracefree/error.hpp"
#include "tracefree/poly.hpp"
#include "tracefree/upoly.hpp"

using namespace tracefree;

namespace {
Polynomial x(int i, int j) { return Polynomial::variable(VarKey::pair(i, j)); }
Polynomial x(int i, int j, int k) { return Polynomial::variable(VarKey::triple(i, j, k)); }
}  // namespace

TEST_CASE("pair coordinates are symmetric with x_ii = 2") {
  CHECK(pair_var(3, 3, 4) == Polynomial(2));
  CHECK(pair_var(4, 2, 4) == x(2, 4));
  CHECK(pair_var(1, 2, 4) == x(1, 2));
  CHECK_THROWS_AS(pair_var(1, 5, 4), Error);
}

TEST_CASE("triple coordinates follow the permutation sign") {
  CHECK(triple_var(1, 3, 2, 4) == -x(1, 2, 3));
  CHECK(triple_var(1, 2, 2, 4).is_zero());
  CHECK(triple_var(2, 3, 4, 4) == x(2, 3, 4));
  CHECK(triple_var(2, 3, 1, 4) == x(1, 2, 3));
  CHECK(triple_var(3, 2, 1, 4) == -x(1, 2, 3));
}

TEST_CASE("repeated-index triples vanish on actual trace-free matrices") {
  // Cayley-Hamilton gives A^2 = -E for trace-free A in SL(2,C).
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = oracle::random_trace_free(rng);
    auto b = oracle::random_trace_free(rng);
    CHECK(std::abs(oracle::triple_coordinate(a, b, b)) < 1e-9);
    CHECK(std::abs(oracle::pair_coordinate(a, a) - 2.0) < 1e-9);
    auto c = oracle::random_trace_free(rng);
    // Odd permutation flips the sign.
    CHECK(std::abs(oracle::triple_coordinate(a, c, b) + oracle::triple_coordinate(a, b, c)) < 1e-9);
  }
}

TEST_CASE("kch variables use a_ii = -2") {
  CHECK(kch_var(2, 2, 3) == Polynomial(-2));
  CHECK(kch_var(3, 1, 3) == Polynomial::variable(VarKey::kch(1, 3)));
}

TEST_CASE("basic arithmetic") {
  CHECK((x(1, 2) + (-x(1, 2))).is_zero());
  Polynomial p = x(1, 2) * x(1, 3);
  CHECK(p.size() == 1);
  CHECK(p.total_degree() == 2);
  CHECK(Polynomial(2) * x(1, 2, 3) - x(1, 2, 3) == x(1, 2, 3));
  CHECK(pow(x(1, 2) + 1, 2) == x(1, 2) * x(1, 2) + Polynomial(2) * x(1, 2) + 1);
  CHECK((x(1, 2) - x(1, 2)).total_degree() == 0);
}

TEST_CASE("canonical text") {
  Polynomial p = x(1, 3) * x(1, 3) - x(3, 4) - 2;
  CHECK(p.to_string() == "x13^2 - x34 - 2");
  CHECK(Polynomial(Rational(1, 2)).to_string() == "1/2");
  CHECK(Polynomial().to_string() == "0");
}

TEST_CASE("variable names round-trip") {
  for (const auto& v : {VarKey::pair(1, 2), VarKey::triple(2, 3, 4), VarKey::kch(1, 5), VarKey::cover_pair(2, 3),
                        VarKey::cover_quad(2, 3, 4), VarKey::pair(3, 12)}) {
    CHECK(parse_var(v.name()) == v);
  }
  CHECK_THROWS_AS(parse_var("y12"), Error);
  CHECK_THROWS_AS(parse_var("x21"), Error);
}

TEST_CASE("symbolic determinants") {
  using Matrix = std::vector<std::vector<Polynomial>>;
  Polynomial d2 = det(Matrix{{2, x(1, 2)}, {x(1, 2), 2}});
  CHECK(d2 == 4 - x(1, 2) * x(1, 2));
  std::vector<std::vector<Polynomial>> twos(3, std::vector<Polynomial>(3, Polynomial(2)));
  CHECK(det(twos).is_zero());
  CHECK_THROWS_AS(det(Matrix{{1, 2}, {3}}), Error);

  // The 3x3 Gram determinant expands to 2(x12 x13 x23 - x12^2 - x13^2 - x23^2 + 4).
  Polynomial g = det(Matrix{{2, x(1, 2), x(1, 3)}, {x(1, 2), 2, x(2, 3)}, {x(1, 3), x(2, 3), 2}});
  Polynomial expected = Polynomial(2) * (x(1, 2) * x(1, 3) * x(2, 3) - x(1, 2) * x(1, 2) - x(1, 3) * x(1, 3) -
                             x(2, 3) * x(2, 3) + 4);
  CHECK(g == expected);
}

TEST_CASE("rectangle matrix at the abelian point") {
  std::vector<std::vector<Polynomial>> m(4, std::vector<Polynomial>(4));
  for (int r = 1; r <= 4; ++r) {
    for (int c = 1; c <= 4; ++c) m[r - 1][c - 1] = pair_var(r, c, 4);
  }
  Assignment all_twos;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) all_twos[VarKey::pair(i, j)] = ComplexValue::from_int(2);
  }
  ComplexValue v = evaluate(det(m), all_twos);
  REQUIRE(v.is_exact());
  CHECK(*v.exact == 0);
}

TEST_CASE("evaluation") {
  Assignment a{{VarKey::pair(1, 2), ComplexValue::from_int(2)}};
  CHECK(*evaluate(x(1, 2) * x(1, 2), a).exact == 4);
  CHECK(*evaluate(Polynomial(2), {}).exact == 2);
  CHECK_THROWS_AS(evaluate(x(1, 3), a), Error);

  double r = (-1.0 + std::sqrt(5.0)) / 2.0;
  Assignment b{{VarKey::pair(1, 3), ComplexValue(Complex(r, 0))}};
  Polynomial eliminant = (x(1, 3) - 2) * (x(1, 3) * x(1, 3) + x(1, 3) - 1);
  ComplexValue v = evaluate(eliminant, b);
  CHECK_FALSE(v.is_exact());
  CHECK(std::abs(v.value) < 1e-12);
}

TEST_CASE("substitution and univariate views") {
  Polynomial p = x(1, 2) * x(1, 3) + 3;
  Polynomial q = p.substitute({{VarKey::pair(1, 3), x(1, 2) + 1}});
  CHECK(q == x(1, 2) * x(1, 2) + x(1, 2) + 3);
  auto coeffs = q.univariate_coefficients(VarKey::pair(1, 2));
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0] == 3);
  CHECK(Polynomial::from_univariate(coeffs, VarKey::pair(1, 2)) == q);
  CHECK_THROWS_AS(p.univariate_coefficients(VarKey::pair(1, 2)), Error);
}

TEST_CASE("univariate gcd and square-free part") {
  UPoly a({Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
  UPoly b({Rational(1), Rational(1)});                 // t + 1
  CHECK(gcd(a, b) == b);
  CHECK(square_free_part(a * a) == a);
  auto [q, r] = divmod(a, b);
  CHECK(q == UPoly({Rational(-1), Rational(1)}));
  CHECK(r.is_zero());
  CHECK(UPoly({Rational(1, 2), Rational(3, 4)}).primitive_integer() == std::vector<Integer>{2, 3});
}
