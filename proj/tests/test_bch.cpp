#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "malcev/bch.hpp"
#include "malcev/matrix.hpp"
#include "oracles/assoc.hpp"

using malcev::AlgebraPtr;
using malcev::bracket;
using malcev::GradedLieAlgebra;
using malcev::GroupElement;
using malcev::LieElement;
using malcev::LieHom;
using malcev::Matrix;
using malcev::Rational;
using malcev::Vec;

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

int index_of(const AlgebraPtr& alg, const std::string& name) {
  for (int i = 0; i < alg->total_dim(); ++i)
    if (alg->element(i).name == name) return i;
  FAIL("no basis element named ", name);
  return -1;
}

}  // namespace

TEST_CASE("hall tree expansion into associative words is faithful") {
  // The oracle compares elements through their associative expansions, so the
  // expansion must not collapse anything: images of the Hall basis stay
  // linearly independent.
  for (int gens : {2, 3}) {
    int n = gens == 2 ? 5 : 3;
    std::vector<malcev::Generator> g;
    for (int i = 0; i < gens; ++i) g.push_back({std::string(1, char('a' + i)), -1});
    AlgebraPtr alg = GradedLieAlgebra::free_nilpotent(g, n);
    std::vector<oracle::Assoc> images = oracle::basis_images(*alg);

    std::map<std::vector<int>, int> columns;
    for (const auto& img : images)
      for (const auto& [w, c] : img.terms)
        columns.emplace(w, static_cast<int>(columns.size()));
    std::vector<Vec> rows;
    for (const auto& img : images) {
      Vec row(columns.size());
      for (const auto& [w, c] : img.terms) row[columns.at(w)] = c;
      rows.push_back(row);
    }
    CHECK(malcev::rank(Matrix::from_rows(rows, static_cast<int>(columns.size()))) ==
          alg->total_dim());
  }
}

TEST_CASE("bch frozen coefficients at class 2") {
  AlgebraPtr alg = free_xy(2);
  LieElement x = alg->generator("x");
  LieElement y = alg->generator("y");
  LieElement z = bch(x, y);
  LieElement expected = x + y + bracket(x, y).scaled(Rational(1, 2));
  CHECK(z == expected);
  CHECK(z.str() == "x + y + 1/2 [x,y]");
}

TEST_CASE("bch frozen coefficients at classes 3 and 4") {
  AlgebraPtr alg = free_xy(4);
  LieElement x = alg->generator("x");
  LieElement y = alg->generator("y");
  LieElement z = bch(x, y);
  CHECK(z.coefficient(index_of(alg, "x")) == Rational(1));
  CHECK(z.coefficient(index_of(alg, "y")) == Rational(1));
  CHECK(z.coefficient(index_of(alg, "[x,y]")) == Rational(1, 2));
  CHECK(z.coefficient(index_of(alg, "[x,[x,y]]")) == Rational(1, 12));
  CHECK(z.coefficient(index_of(alg, "[y,[x,y]]")) == Rational(-1, 12));
  // Degree 4 of log(e^x e^y) is -1/24 [y,[x,[x,y]]].
  CHECK(z.coefficient(index_of(alg, "[x,[x,[x,y]]]")) == Rational(0));
  CHECK(z.coefficient(index_of(alg, "[y,[x,[x,y]]]")) == Rational(-1, 24));
  CHECK(z.coefficient(index_of(alg, "[y,[y,[x,y]]]")) == Rational(0));
}

TEST_CASE("bch of generators matches the associative log(exp exp) oracle") {
  for (int n : {2, 3, 4, 5, 6}) {
    AlgebraPtr alg = free_xy(n);
    LieElement x = alg->generator("x");
    LieElement y = alg->generator("y");
    oracle::Assoc lhs = oracle::expand(bch(x, y));
    oracle::Assoc rhs =
        oracle::assoc_log(oracle::assoc_exp(oracle::expand(x)) *
                          oracle::assoc_exp(oracle::expand(y)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bch of random elements matches the oracle") {
  std::mt19937 rng(2024);
  AlgebraPtr alg = free_xy(4);
  for (int t = 0; t < 3; ++t) {
    LieElement a = random_element(alg, rng);
    LieElement b = random_element(alg, rng);
    oracle::Assoc lhs = oracle::expand(bch(a, b));
    oracle::Assoc rhs =
        oracle::assoc_log(oracle::assoc_exp(oracle::expand(a)) *
                          oracle::assoc_exp(oracle::expand(b)));
    CHECK(lhs == rhs);
  }
  AlgebraPtr three =
      GradedLieAlgebra::free_nilpotent({{"u", -1}, {"v", -1}, {"w", -1}}, 3);
  for (int t = 0; t < 3; ++t) {
    LieElement a = random_element(three, rng);
    LieElement b = random_element(three, rng);
    oracle::Assoc lhs = oracle::expand(bch(a, b));
    oracle::Assoc rhs =
        oracle::assoc_log(oracle::assoc_exp(oracle::expand(a)) *
                          oracle::assoc_exp(oracle::expand(b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bch unit and inverse laws") {
  std::mt19937 rng(7);
  AlgebraPtr alg = free_xy(5);
  LieElement zero = alg->zero();
  for (int t = 0; t < 4; ++t) {
    LieElement a = random_element(alg, rng);
    CHECK(bch(a, zero) == a);
    CHECK(bch(zero, a) == a);
    CHECK(bch(a, malcev::group_inverse(a)).is_zero());
    CHECK(bch(malcev::group_inverse(a), a).is_zero());
  }
}

TEST_CASE("bch of collinear elements is addition") {
  AlgebraPtr alg = free_xy(5);
  LieElement x = alg->generator("x");
  CHECK(bch(x.scaled(Rational(2)), x.scaled(Rational(3))) == x.scaled(Rational(5)));
  LieElement c = bracket(x, alg->generator("y"));
  CHECK(bch(c, c) == c.scaled(Rational(2)));
}

TEST_CASE("bch on an abelian algebra is addition") {
  std::mt19937 rng(11);
  AlgebraPtr alg = free_xy(1);
  LieElement a = random_element(alg, rng);
  LieElement b = random_element(alg, rng);
  CHECK(bch(a, b) == a + b);
}

TEST_CASE("group law is associative") {
  std::mt19937 rng(99);
  for (int n : {4, 5}) {
    AlgebraPtr alg = free_xy(n);
    int trials = n == 4 ? 4 : 2;
    for (int t = 0; t < trials; ++t) {
      GroupElement g(random_element(alg, rng));
      GroupElement h(random_element(alg, rng));
      GroupElement k(random_element(alg, rng));
      CHECK((g * h) * k == g * (h * k));
    }
  }
}

TEST_CASE("group identity and inverse behave") {
  std::mt19937 rng(5);
  AlgebraPtr alg = free_xy(4);
  GroupElement e = GroupElement::identity(alg);
  GroupElement g(random_element(alg, rng));
  GroupElement h(random_element(alg, rng));
  CHECK(g * e == g);
  CHECK(e * g == g);
  CHECK(g * g.inverse() == e);
  CHECK((g * h).inverse() == h.inverse() * g.inverse());
}

TEST_CASE("lie hom construction checks shapes and brackets") {
  AlgebraPtr alg = free_xy(2);
  // x -> x, y -> y, [x,y] -> 0 is not a homomorphism of the free algebra.
  Matrix kill(1, 1);
  CHECK_THROWS_AS(LieHom(alg, alg, {Matrix::identity(2), kill}),
                  std::invalid_argument);
  Matrix bad_shape(3, 2);
  CHECK_THROWS_AS(LieHom(alg, alg, {bad_shape}), std::invalid_argument);
  CHECK_THROWS_AS(LieHom(alg, alg,
                         {Matrix::identity(2), Matrix::identity(1),
                          Matrix::identity(1)}),
                  std::invalid_argument);
}

TEST_CASE("swapping generators is a homomorphism") {
  AlgebraPtr alg = free_xy(3);
  // x <-> y sends [x,y] to -[x,y], [x,[x,y]] to [y,[y,x]] = -[y,[x,y]].
  Matrix d1(2, 2);
  d1.set(0, 1, Rational(1));
  d1.set(1, 0, Rational(1));
  Matrix d2(1, 1);
  d2.set(0, 0, Rational(-1));
  Matrix d3(2, 2);
  d3.set(0, 1, Rational(-1));
  d3.set(1, 0, Rational(-1));
  LieHom swap(alg, alg, {d1, d2, d3});
  LieElement x = alg->generator("x");
  LieElement y = alg->generator("y");
  CHECK(swap.apply(bracket(x, bracket(x, y))) == -bracket(y, bracket(x, y)));

  std::mt19937 rng(31);
  GroupElement g(random_element(alg, rng));
  GroupElement h(random_element(alg, rng));
  CHECK(push_forward(swap, g * h) == push_forward(swap, g) * push_forward(swap, h));
}

TEST_CASE("projection to a smaller class bound is a homomorphism") {
  AlgebraPtr from = free_xy(3);
  AlgebraPtr to = free_xy(2);
  LieHom trunc(from, to, {Matrix::identity(2), Matrix::identity(1), Matrix(0, 2)});
  std::mt19937 rng(17);
  GroupElement g(random_element(from, rng));
  GroupElement h(random_element(from, rng));
  CHECK(push_forward(trunc, g * h) == push_forward(trunc, g) * push_forward(trunc, h));
}

TEST_CASE("killing a generator is a homomorphism") {
  AlgebraPtr from =
      GradedLieAlgebra::free_nilpotent({{"x", -1}, {"y", -1}, {"z", -1}}, 2);
  AlgebraPtr to = free_xy(2);
  Matrix d1(2, 3);
  d1.set(0, 0, Rational(1));
  d1.set(1, 1, Rational(1));
  Matrix d2(1, 3);  // source degree 2 basis: [x,y], [x,z], [y,z]
  d2.set(0, 0, Rational(1));
  LieHom kill_z(from, to, {d1, d2});
  CHECK(kill_z.apply(from->generator("z")).is_zero());
  CHECK(kill_z.apply(bracket(from->generator("x"), from->generator("y"))) ==
        bracket(to->generator("x"), to->generator("y")));
}

TEST_CASE("identity, zero and abelianization homs") {
  std::mt19937 rng(23);
  AlgebraPtr alg = free_xy(4);
  LieElement a = random_element(alg, rng);
  CHECK(LieHom::identity(alg).apply(a) == a);
  CHECK(LieHom::zero(alg, alg).apply(a).is_zero());

  LieHom ab = LieHom::abelianization(alg);
  CHECK(ab.to()->class_bound() == 1);
  GroupElement g(random_element(alg, rng));
  GroupElement h(random_element(alg, rng));
  // In the abelianized group the product is plain addition of degree-1 parts.
  LieElement sum = ab.apply(g.log()) + ab.apply(h.log());
  CHECK(push_forward(ab, g * h).log() == sum);
}
