#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tracefree/cover.hpp"
#include "tracefree/error.hpp"
#include "tracefree/representation.hpp"
#include "tracefree/slice.hpp"

using namespace tracefree;

namespace {

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 evaluate_word(const Word& w, const std::vector<Mat2>& meridians) {
  Mat2 out{1, 0, 0, 1};
  for (const auto& letter : w) {
    const Mat2& m = meridians[letter.index - 1];
    Mat2 inv{m[3], -m[1], -m[2], m[0]};
    for (int k = 0; k < std::abs(letter.power); ++k) out = multiply(out, letter.power > 0 ? m : inv);
  }
  return out;
}

}  // namespace

TEST_CASE("word text round-trips") {
  Word w = parse_word("a2 a3^-1 m1^2");
  REQUIRE(w.size() == 3);
  CHECK(w[1] == Letter{'a', 3, -1});
  CHECK(to_string(w) == "a2 a3^-1 m1^2");
  CHECK(to_string(Word{}) == "1");
  CHECK(parse_word("1").empty());
  CHECK_THROWS_AS(parse_word("q2"), Error);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_word("a2 a3 a3^-1 a2^-1")).empty());
  CHECK(to_string(free_reduce(parse_word("a2 a2 a3 a3^-1"))) == "a2^2");
  CHECK(to_string(free_reduce(parse_word("m1 m2^-1 m2 m1"))) == "m1^2");
}

TEST_CASE("Wirtinger presentation") {
  Diagram trefoil = parse_triples("(1,2,3),(2,3,1),(3,1,2)");
  GroupPresentation p = wirtinger_presentation(trefoil);
  CHECK(p.generators.size() == 3);
  REQUIRE(p.relators.size() == 2);
  CHECK(to_string(p.relators[0]) == "m1 m2 m1^-1 m3^-1");
  // Under-arcs are stored sorted, so (2,3,1) is read as (2,1,3).
  CHECK(to_string(p.relators[1]) == "m2 m1 m2^-1 m3^-1");

  CHECK(wirtinger_presentation(oracle::census("4_1")).relators.size() == 3);
  CHECK(wirtinger_presentation(trefoil, 1).relators[0] == p.relators[1]);

  GroupPresentation kink = wirtinger_presentation(parse_triples("(1,1,1)"));
  CHECK(kink.generators.size() == 1);
  CHECK(kink.relators.empty());
}

TEST_CASE("Wirtinger relators hold in realized representations") {
  for (const auto& name : {"3_1", "4_1"}) {
    Diagram d = oracle::census(name);
    for (const auto& point : compute_s0(d).points) {
      auto rep = realize_representation(d, point);
      REQUIRE(rep);
      // Dropping the first and then the last relator covers all of them.
      std::vector<Word> relators = wirtinger_presentation(d, 1).relators;
      relators.push_back(wirtinger_presentation(d, 1).relators.back());
      for (const auto& r : wirtinger_presentation(d).relators) relators.push_back(r);
      for (const auto& r : relators) {
        Mat2 v = evaluate_word(r, rep->meridians);
        CHECK(std::abs(v[0] - Complex(1)) + std::abs(v[1]) + std::abs(v[2]) + std::abs(v[3] - Complex(1)) < 1e-8);
      }
    }
  }
}

TEST_CASE("rewriting into the index-two subgroup") {
  CHECK(fox_rewrite(parse_word("m1^2")).empty());
  CHECK(to_string(fox_rewrite(parse_word("m1 m2"))) == "a2");
  CHECK(to_string(fox_rewrite(parse_word("m1 m2 m1^-1 m3^-1"))) == "a2 a3");
  CHECK(to_string(fox_rewrite(parse_word("m1 m1 m2 m1^-1 m3^-1 m1^-1"))) == "a2^-1 a3^-1");
  CHECK(to_string(fox_rewrite(parse_word("m2 m3"))) == "a2^-1 a3");
  CHECK_THROWS_AS(fox_rewrite(parse_word("m1 m2 m3")), Error);
  try {
    fox_rewrite(parse_word("m2"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddParity);
  }
}

TEST_CASE("Schreier rewriting without the branching relation") {
  CHECK(to_string(fox_rewrite(parse_word("m1 m2"), false)) == "a2");
  CHECK(to_string(fox_rewrite(parse_word("m2 m1^-1"), false)) == "b2");
  CHECK(to_string(fox_rewrite(parse_word("m1^2"), false)) == "a1");
}

TEST_CASE("Fox presentation sizes") {
  GroupPresentation t = fox_presentation(oracle::census("3_1"));
  CHECK(t.generators.size() == 2);
  CHECK(t.relators.size() == 4);
  GroupPresentation f = fox_presentation(oracle::census("4_1"));
  CHECK(f.generators.size() == 3);
  CHECK(f.relators.size() == 6);
  GroupPresentation h = fox_presentation(parse_triples("(1,2,2),(2,1,1)"));
  CHECK(h.generators.size() == 1);
  CHECK(h.relators.size() == 2);
}

TEST_CASE("homology of the branched cover matches the knot determinant") {
  for (const auto& name : oracle::census_names()) {
    Diagram d = oracle::census(name);
    INFO(name);
    long long det = oracle::knot_determinant(d);
    for (int drop = 1; drop <= d.n; ++drop) {
      auto factors = abelianization(fox_presentation(d, static_cast<std::size_t>(drop)));
      Integer order = 1;
      for (const auto& f : factors) {
        CHECK(f != 0);
        order *= f;
      }
      CHECK(order == static_cast<long>(det));
    }
  }
  CHECK(abelianization(fox_presentation(oracle::census("3_1"))) == std::vector<Integer>{3});
  CHECK(abelianization(fox_presentation(oracle::census("4_1"))) == std::vector<Integer>{5});
  CHECK(abelianization(fox_presentation(oracle::census("5_2"))) == std::vector<Integer>{7});
}

TEST_CASE("degenerate covers") {
  CHECK(abelianization(fox_presentation(parse_triples("(1,1,1)"))).empty());
  GroupPresentation free2{{Letter{'a', 2, 1}, Letter{'a', 3, 1}}, {}};
  CHECK(abelianization(free2) == std::vector<Integer>{0, 0});
  // The Hopf link double cover is RP^3.
  CHECK(abelianization(fox_presentation(parse_triples("(1,2,2),(2,1,1)"))) == std::vector<Integer>{2});
}

TEST_CASE("relabeling arcs does not change the cover homology") {
  Diagram d = oracle::census("6_1");
  std::vector<int> perm{3, 1, 7, 5, 2, 6, 4};
  CHECK(abelianization(fox_presentation(relabel(d, perm))) == abelianization(fox_presentation(d)));
}
