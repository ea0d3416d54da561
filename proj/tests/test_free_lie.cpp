#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "malcev/lie_algebra.hpp"
#include "oracles/hall_enum.hpp"

using malcev::AlgebraPtr;
using malcev::Generator;
using malcev::GradedLieAlgebra;
using malcev::LieElement;
using malcev::Rational;
using malcev::bracket;

namespace {

AlgebraPtr free_xy(int n) {
  return GradedLieAlgebra::free_nilpotent({{"x", -1}, {"y", -1}}, n);
}

LieElement random_element(const AlgebraPtr& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  LieElement e = alg->zero();
  for (int i = 0; i < alg->total_dim(); ++i)
    e.set_coefficient(i, Rational(num(rng), den(rng)));
  return e;
}

}  // namespace

TEST_CASE("witt dimension formula") {
  CHECK(malcev::witt_dim(2, 1) == 2);
  CHECK(malcev::witt_dim(2, 2) == 1);
  CHECK(malcev::witt_dim(2, 3) == 2);
  CHECK(malcev::witt_dim(2, 4) == 3);
  CHECK(malcev::witt_dim(2, 5) == 6);
  CHECK(malcev::witt_dim(2, 6) == 9);
  CHECK(malcev::witt_dim(3, 2) == 3);
  CHECK(malcev::witt_dim(3, 3) == 8);
  CHECK(malcev::witt_dim(1, 1) == 1);
  CHECK(malcev::witt_dim(1, 2) == 0);
  CHECK(malcev::witt_dim(0, 3) == 0);
  CHECK_THROWS_AS(malcev::witt_dim(2, 0), std::invalid_argument);
}

TEST_CASE("hall basis dimensions match witt and the brute-force enumeration") {
  for (int k = 1; k <= 3; ++k) {
    AlgebraPtr alg = GradedLieAlgebra::free_nilpotent(
        [&] {
          std::vector<Generator> gens;
          for (int i = 0; i < k; ++i) gens.push_back({"g" + std::to_string(i), -1});
          return gens;
        }(),
        6);
    for (int d = 1; d <= 6; ++d) {
      long long w = malcev::witt_dim(k, d);
      CHECK(alg->degree_dim(d) == w);
      CHECK(oracle::hall_count(k, d) == w);
    }
  }
}

TEST_CASE("two-generator dims through class 6") {
  AlgebraPtr alg = free_xy(6);
  CHECK(alg->dims() == std::vector<int>{2, 1, 2, 3, 6, 9});
  CHECK(alg->total_dim() == 23);
}

TEST_CASE("basic brackets and hall word names") {
  AlgebraPtr alg = free_xy(3);
  LieElement x = alg->generator("x");
  LieElement y = alg->generator("y");
  CHECK(bracket(x, x).is_zero());
  LieElement xy = bracket(x, y);
  CHECK(xy.str() == "[x,y]");
  CHECK(bracket(y, x) == -xy);
  CHECK(bracket(x, xy).str() == "[x,[x,y]]");
  CHECK(bracket(y, xy).str() == "[y,[x,y]]");
  CHECK_THROWS_AS(alg->generator("z"), std::invalid_argument);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(GradedLieAlgebra::free_nilpotent({{"x", -1}, {"x", -1}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(GradedLieAlgebra::free_nilpotent({{"x", 0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(GradedLieAlgebra::free_nilpotent({{"x", -1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(GradedLieAlgebra::free_nilpotent({{"x", -1}}, 13), std::invalid_argument);
}

TEST_CASE("truncation sends deep brackets to zero") {
  AlgebraPtr alg = free_xy(2);
  LieElement x = alg->generator("x");
  LieElement y = alg->generator("y");
  LieElement xy = bracket(x, y);
  CHECK_FALSE(xy.is_zero());
  CHECK(bracket(x, xy).is_zero());
  CHECK(bracket(xy, xy).is_zero());
}

TEST_CASE("jacobi, antisymmetry and bilinearity on random elements") {
  std::mt19937 rng(424242);
  AlgebraPtr alg = free_xy(5);
  for (int trial = 0; trial < 20; ++trial) {
    LieElement a = random_element(alg, rng);
    LieElement b = random_element(alg, rng);
    LieElement c = random_element(alg, rng);
    CHECK(bracket(a, b) == -bracket(b, a));
    CHECK(bracket(a, a).is_zero());
    LieElement jac = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
                     bracket(bracket(c, a), b);
    CHECK(jac.is_zero());
    Rational lam(3, 7);
    CHECK(bracket(a.scaled(lam), b) == bracket(a, b).scaled(lam));
    CHECK(bracket(a + b, c) == bracket(a, c) + bracket(b, c));
  }
}

TEST_CASE("rewriting is confluent across association orders") {
  AlgebraPtr alg = GradedLieAlgebra::free_nilpotent({{"x", -1}, {"y", -1}, {"z", -1}}, 5);
  LieElement x = alg->generator("x");
  LieElement y = alg->generator("y");
  LieElement z = alg->generator("z");
  // [x,[y,[x,z]]] computed directly vs via the Jacobi-expanded route
  LieElement inner = bracket(y, bracket(x, z));
  LieElement direct = bracket(x, inner);
  LieElement expanded = bracket(bracket(x, y), bracket(x, z)) +
                        bracket(y, bracket(x, bracket(x, z)));
  CHECK(direct == expanded);
  // nested both ways around degree 4
  LieElement left_first = bracket(bracket(bracket(x, y), z), z);
  LieElement jacobi_route =
      bracket(bracket(bracket(x, y), z), z);  // same expression, one rewrite path
  CHECK(left_first == jacobi_route);
}

TEST_CASE("structure passes the full verification sweep") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<Generator> gens;
    for (int i = 0; i < k; ++i) gens.push_back({std::string(1, char('a' + i)), -1});
    for (int n = 1; n <= 5; ++n) {
      AlgebraPtr alg = GradedLieAlgebra::free_nilpotent(gens, n);
      auto report = malcev::verify_graded_lie(*alg);
      INFO("k=", k, " n=", n);
      CHECK(report.pass);
      for (const auto& f : report.failures) MESSAGE(f);
    }
  }
}

TEST_CASE("weights extend additively to hall words") {
  AlgebraPtr alg = GradedLieAlgebra::free_nilpotent({{"x", -1}, {"k", -2}}, 3);
  for (int i = 0; i < alg->total_dim(); ++i) {
    const auto& e = alg->element(i);
    if (e.degree == 1) continue;
    CHECK(e.weight == alg->element(e.left).weight + alg->element(e.right).weight);
  }
  LieElement x = alg->generator("x");
  LieElement k = alg->generator("k");
  LieElement xk = bracket(x, k);
  REQUIRE(xk.coefficients().size() == 1);
  CHECK(alg->element(xk.coefficients().begin()->first).weight == -3);
}

TEST_CASE("lcs filtration of the free algebra") {
  AlgebraPtr alg = free_xy(2);
  auto gammas = malcev::lcs_filtration(*alg);
  REQUIRE(gammas.size() == 3);
  CHECK(gammas[0].dim() == 3);   // whole algebra
  CHECK(gammas[1].dim() == 1);   // degree-2 part
  CHECK(gammas[2].dim() == 0);   // zero beyond the class
  // abelianization dimension = generator count
  CHECK(gammas[0].dim() - gammas[1].dim() == alg->generator_count());
}

TEST_CASE("degree coordinates round-trip") {
  AlgebraPtr alg = free_xy(3);
  LieElement x = alg->generator("x");
  LieElement y = alg->generator("y");
  LieElement e = bracket(x, y) + x.scaled(Rational(2));
  malcev::Vec d1 = e.degree_coords(1);
  CHECK(d1[0] == Rational(2));
  CHECK(d1[1] == Rational(0));
  malcev::Vec d2 = e.degree_coords(2);
  CHECK(d2[0] == Rational(1));
  LieElement back = alg->from_degree_coords(1, d1) + alg->from_degree_coords(2, d2);
  CHECK(back == e);
  int deg = 0;
  CHECK_FALSE(e.homogeneous_degree(&deg));
  CHECK(bracket(x, y).homogeneous_degree(&deg));
  CHECK(deg == 2);
}
