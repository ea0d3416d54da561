#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "malcev/cech.hpp"
#include "malcev/cosimplicial.hpp"

using malcev::CechInput;
using malcev::CochainComplex;
using malcev::CosimplicialAlgebra;
using malcev::CosimplicialSpace;
using malcev::Matrix;
using malcev::Rational;
using malcev::Subspace;
using malcev::Vec;

namespace {

// two opens whose overlap has two components: the nerve of a circle
CechInput circle_input() {
  CechInput in;
  in.open_count = 2;
  Matrix both(2, 1);
  both.set(0, 0, Rational(1));
  both.set(1, 0, Rational(1));
  in.patches = {{{0}, 1}, {{1}, 1}, {{0, 1}, 2}};
  in.restrictions = {{{0}, {0, 1}, both}, {{1}, {0, 1}, both}};
  return in;
}

// three pairwise-overlapping opens with contractible overlaps: a disc
CechInput disc_input() {
  CechInput in;
  in.open_count = 3;
  Matrix one = Matrix::identity(1);
  in.patches = {{{0}, 1}, {{1}, 1}, {{2}, 1},       {{0, 1}, 1},
                {{0, 2}, 1}, {{1, 2}, 1}, {{0, 1, 2}, 1}};
  in.restrictions = {{{0}, {0, 1}, one},    {{1}, {0, 1}, one},    {{0}, {0, 2}, one},
                     {{2}, {0, 2}, one},    {{1}, {1, 2}, one},    {{2}, {1, 2}, one},
                     {{0, 1}, {0, 1, 2}, one}, {{0, 2}, {0, 1, 2}, one}, {{1, 2}, {0, 1, 2}, one}};
  return in;
}

Vec random_vec(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = Rational(num(rng), den(rng));
  return v;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b[i];
  return out;
}

bool vec_zero(const Vec& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("constant object satisfies the identities and has point cohomology") {
  CosimplicialSpace C = malcev::constant_cosimplicial(2, 3);
  CHECK(malcev::verify_cosimplicial(C).pass);

  malcev::NormalizedComplex N = malcev::conormalize(C);
  CHECK(N.levels[0] == Subspace::full(2));
  for (int n = 1; n <= 3; ++n) CHECK(N.levels[n].dim() == 0);

  malcev::Cohomology H = malcev::cohomology(C);
  CHECK(H.dims == std::vector<int>{2, 0, 0});
  CHECK(H.representatives[0].size() == 2);
  CHECK(H.representatives[1].empty());
}

TEST_CASE("shape violations are rejected at construction") {
  std::vector<int> dims{1, 1};
  std::vector<std::vector<Matrix>> cofaces{{Matrix::identity(1), Matrix::identity(1)}};
  std::vector<std::vector<Matrix>> codegens{{Matrix::identity(1)}};
  CHECK_NOTHROW(CosimplicialSpace(dims, cofaces, codegens));
  CHECK_THROWS_AS(CosimplicialSpace(dims, {{Matrix::identity(1)}}, codegens),
                  std::invalid_argument);
  CHECK_THROWS_AS(CosimplicialSpace(dims, {{Matrix::identity(1), Matrix(2, 1)}}, codegens),
                  std::invalid_argument);
  CHECK_THROWS_AS(CosimplicialSpace({1}, cofaces, codegens), std::invalid_argument);
}

TEST_CASE("a flipped coface sign is reported with the violated identity") {
  std::vector<int> dims{1, 1, 1};
  std::vector<std::vector<Matrix>> cofaces{
      {Matrix::identity(1).scaled(Rational(-1)), Matrix::identity(1)},
      {Matrix::identity(1), Matrix::identity(1), Matrix::identity(1)}};
  std::vector<std::vector<Matrix>> codegens{{Matrix::identity(1)},
                                            {Matrix::identity(1), Matrix::identity(1)}};
  malcev::CheckReport rep = malcev::verify_cosimplicial(CosimplicialSpace(dims, cofaces, codegens));
  CHECK(!rep.pass);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures.front().find("d^") != std::string::npos);
}

TEST_CASE("complex cohomology counts ranks and guards the square-zero law") {
  CochainComplex two_term{{1, 1}, {Matrix(1, 1)}};
  CHECK(malcev::complex_cohomology(two_term) == std::vector<int>{1});

  CochainComplex exact{{1, 1}, {Matrix::identity(1)}};
  CHECK(malcev::complex_cohomology(exact) == std::vector<int>{0});

  CochainComplex broken{{1, 1, 1}, {Matrix::identity(1), Matrix::identity(1)}};
  CHECK_THROWS_AS(malcev::complex_cohomology(broken), std::logic_error);
}

TEST_CASE("circle cover has the cohomology of a circle") {
  CosimplicialAlgebra A = malcev::cech_build(circle_input(), 2);
  CHECK(malcev::verify_cosimplicial_algebra(A).pass);
  malcev::Cohomology H = malcev::cohomology(A.space());
  CHECK(H.dims == std::vector<int>{1, 1});
  CHECK(H.representatives[1].size() == 1);

  malcev::NormalizedComplex N = malcev::conormalize(A.space());
  CHECK(N.levels[0].dim() == 2);
  CHECK(N.levels[1].dim() == 4);
  for (int n = 0; n <= 2; ++n) CHECK(N.levels[n].dim() <= A.space().dim(n));
}

TEST_CASE("disc cover is contractible and a single open is constant") {
  malcev::Cohomology disc = malcev::cohomology(malcev::cech_build(disc_input(), 3).space());
  CHECK(disc.dims == std::vector<int>{1, 0, 0});

  CechInput single;
  single.open_count = 1;
  single.patches = {{{0}, 1}};
  malcev::Cohomology pt = malcev::cohomology(malcev::cech_build(single, 3).space());
  CHECK(pt.dims == std::vector<int>{1, 0, 0});
}

TEST_CASE("disjoint opens count components") {
  CechInput in;
  in.open_count = 2;
  in.patches = {{{0}, 1}, {{1}, 1}};
  malcev::Cohomology H = malcev::cohomology(malcev::cech_build(in, 2).space());
  CHECK(H.dims == std::vector<int>{2, 0});
}

TEST_CASE("cech input validation") {
  CechInput in = circle_input();
  in.patches[2].opens = {1, 0};
  CHECK_THROWS_AS(malcev::cech_build(in, 2), std::invalid_argument);

  in = circle_input();
  in.patches.push_back({{0, 1}, 1});
  CHECK_THROWS_AS(malcev::cech_build(in, 2), std::invalid_argument);

  in = circle_input();
  in.patches[0].dim = 0;  // {0} empty below the nonempty overlap
  CHECK_THROWS_AS(malcev::cech_build(in, 2), std::invalid_argument);

  in = circle_input();
  in.restrictions.pop_back();
  CHECK_THROWS_AS(malcev::cech_build(in, 2), std::invalid_argument);

  in = circle_input();
  in.restrictions[0].map.set(0, 0, Rational(2));  // not a component map
  CHECK_THROWS_AS(malcev::cech_build(in, 2), std::invalid_argument);

  CHECK_THROWS_AS(malcev::cech_build(CechInput{}, 2), std::invalid_argument);
}

TEST_CASE("non-functorial restrictions are rejected") {
  CechInput in;
  in.open_count = 3;
  Matrix id2 = Matrix::identity(2);
  Matrix swap2(2, 2);
  swap2.set(0, 1, Rational(1));
  swap2.set(1, 0, Rational(1));
  Matrix both(2, 1);
  both.set(0, 0, Rational(1));
  both.set(1, 0, Rational(1));
  Matrix one = Matrix::identity(1);
  in.patches = {{{0}, 2}, {{1}, 1}, {{2}, 1},       {{0, 1}, 2},
                {{0, 2}, 2}, {{1, 2}, 2}, {{0, 1, 2}, 2}};
  in.restrictions = {{{0}, {0, 1}, id2},
                     {{1}, {0, 1}, both},
                     {{0}, {0, 2}, swap2},
                     {{2}, {0, 2}, both},
                     {{1}, {1, 2}, both},
                     {{2}, {1, 2}, both},
                     {{0, 1}, {0, 1, 2}, id2},
                     {{0, 2}, {0, 1, 2}, id2},
                     {{1, 2}, {0, 1, 2}, id2}};
  CHECK_THROWS_AS(malcev::cech_build(in, 2), std::invalid_argument);
}

TEST_CASE("bar complexes have point cohomology") {
  CHECK(malcev::cohomology(malcev::bar_complex(1, 3).space()).dims ==
        std::vector<int>{1, 0, 0});
  CosimplicialAlgebra bar2 = malcev::bar_complex(2, 4);
  CHECK(bar2.space().dim(4) == 32);
  CHECK(malcev::verify_cosimplicial_algebra(bar2).pass);
  CHECK(malcev::cohomology(bar2.space()).dims == std::vector<int>{1, 0, 0, 0});
  CHECK(malcev::cohomology(malcev::bar_complex(3, 3).space()).dims ==
        std::vector<int>{1, 0, 0});
  CHECK_THROWS_AS(malcev::bar_complex(0, 3), std::invalid_argument);
}

TEST_CASE("cup product with the unit is the identity") {
  CosimplicialAlgebra A = malcev::bar_complex(2, 4);
  std::mt19937 rng(11);
  for (int lvl = 0; lvl <= 3; ++lvl) {
    Vec v = random_vec(A.space().dim(lvl), rng);
    CHECK(vec_eq(malcev::aw_cup(A, 0, A.unit(0), lvl, v), v));
    CHECK(vec_eq(malcev::aw_cup(A, lvl, v, 0, A.unit(0)), v));
  }
}

TEST_CASE("cup product is associative at the top level") {
  CosimplicialAlgebra A = malcev::bar_complex(2, 4);
  std::mt19937 rng(23);
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 2, 0}})
    for (int trial = 0; trial < 5; ++trial) {
      Vec u = random_vec(A.space().dim(a), rng);
      Vec v = random_vec(A.space().dim(b), rng);
      Vec w = random_vec(A.space().dim(c), rng);
      Vec lhs = malcev::aw_cup(A, a + b, malcev::aw_cup(A, a, u, b, v), c, w);
      Vec rhs = malcev::aw_cup(A, a, u, b + c, malcev::aw_cup(A, b, v, c, w));
      CHECK(vec_eq(lhs, rhs));
    }
}

TEST_CASE("cup product satisfies the Leibniz rule") {
  CosimplicialAlgebra A = malcev::bar_complex(2, 4);
  const CosimplicialSpace& C = A.space();
  std::mt19937 rng(37);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {0, 3}, {1, 1}})
    for (int trial = 0; trial < 5; ++trial) {
      Vec u = random_vec(C.dim(n), rng);
      Vec v = random_vec(C.dim(m), rng);
      Vec lhs = malcev::moore_differential(C, n + m).apply(malcev::aw_cup(A, n, u, m, v));
      Vec du_v = malcev::aw_cup(A, n + 1, malcev::moore_differential(C, n).apply(u), m, v);
      Vec u_dv = malcev::aw_cup(A, n, u, m + 1, malcev::moore_differential(C, m).apply(v));
      Vec rhs = (n % 2 == 0) ? vec_sub(du_v, vec_sub(Vec(du_v.size(), Rational(0)), u_dv))
                             : vec_sub(du_v, u_dv);
      CHECK(vec_eq(lhs, rhs));
    }
}

TEST_CASE("cup products above the top level are rejected") {
  CosimplicialAlgebra A = malcev::bar_complex(2, 4);
  Vec u(A.space().dim(2), Rational(0));
  Vec v(A.space().dim(3), Rational(0));
  CHECK_THROWS_AS(malcev::aw_cup(A, 2, u, 3, v), std::out_of_range);
}

TEST_CASE("circle one-classes cup to coboundaries") {
  CosimplicialAlgebra A = malcev::cech_build(circle_input(), 3);
  malcev::Cohomology H = malcev::cohomology(A.space());
  CHECK(H.dims == std::vector<int>{1, 1, 0});
  const Vec& one_class = H.representatives[1].front();
  Vec square = malcev::aw_cup(A, 1, one_class, 1, one_class);
  CHECK(vec_zero(malcev::moore_differential(A.space(), 2).apply(square)));
  // H^2 vanishes, so the square of the degree-one class is exact
  Subspace image = malcev::column_space(malcev::moore_differential(A.space(), 1));
  CHECK(image.contains(square));
}

TEST_CASE("hodge filtration steps match conormalization and decrease") {
  CosimplicialAlgebra A = malcev::bar_complex(2, 3);
  const CosimplicialSpace& C = A.space();
  malcev::NormalizedComplex N = malcev::conormalize(C);

  std::vector<std::vector<Subspace>> fil;
  for (int i = 0; i <= C.top_level() + 1; ++i) fil.push_back(malcev::hodge_filtration(C, i));

  for (int n = 0; n <= C.top_level(); ++n) {
    CHECK(fil[0][n] == Subspace::full(C.dim(n)));
    CHECK(fil[C.top_level() + 1][n].dim() == 0);
    if (n >= 1) CHECK(fil[n][n] == N.levels[n]);
    for (int i = 0; i <= C.top_level(); ++i) CHECK(fil[i][n].contains(fil[i + 1][n]));
  }
  CHECK(fil[1][0].dim() == 0);  // Fil^1 starts above level 0

  CHECK_THROWS_AS(malcev::hodge_filtration(C, -1), std::invalid_argument);
}

TEST_CASE("constant object has trivial positive hodge steps") {
  CosimplicialSpace C = malcev::constant_cosimplicial(3, 3);
  std::vector<Subspace> fil = malcev::hodge_filtration(C, 1);
  for (int n = 0; n <= 3; ++n) CHECK(fil[n].dim() == 0);
}

TEST_CASE("broken algebra structures are reported") {
  CosimplicialSpace C = malcev::constant_cosimplicial(2, 0);
  Matrix mult(2, 4);
  mult.set(0, 0, Rational(1));  // e0*e0 = e0, every other product zero
  std::vector<Vec> unit{Vec(2, Rational(1))};
  malcev::CheckReport rep =
      malcev::verify_cosimplicial_algebra(CosimplicialAlgebra(C, {mult}, unit));
  CHECK(!rep.pass);
  CHECK(!rep.failures.empty());
}

TEST_CASE("cech objects build deterministically") {
  CosimplicialAlgebra a = malcev::cech_build(circle_input(), 2);
  CosimplicialAlgebra b = malcev::cech_build(circle_input(), 2);
  for (int n = 0; n < 2; ++n)
    for (int i = 0; i <= n + 1; ++i) CHECK(a.space().coface(n, i) == b.space().coface(n, i));
}
