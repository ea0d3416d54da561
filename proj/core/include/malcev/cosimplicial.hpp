#pragma once

#include <string>
#include <vector>

#include "malcev/matrix.hpp"
#include "malcev/subspace.hpp"

namespace malcev {

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Finite cosimplicial vector space: levels C^0..C^M with coface maps
/// d^i: C^n -> C^{n+1} (0 <= i <= n+1) and codegeneracy maps
/// sigma^j: C^n -> C^{n-1} (0 <= j <= n-1), all exact rational matrices.
/// The constructor enforces shapes only; the simplicial identities are
/// checked by verify_cosimplicial so that deliberately broken objects can
/// still be built and diagnosed.
class CosimplicialSpace {
public:
  CosimplicialSpace(std::vector<int> dims, std::vector<std::vector<Matrix>> cofaces,
                    std::vector<std::vector<Matrix>> codegeneracies);

  int top_level() const { return static_cast<int>(dims_.size()) - 1; }
  int dim(int n) const;
  const Matrix& coface(int n, int i) const;        // out of level n, 0 <= n < top
  const Matrix& codegeneracy(int n, int j) const;  // out of level n, 1 <= n <= top

private:
  std::vector<int> dims_;
  std::vector<std::vector<Matrix>> cofaces_;
  std::vector<std::vector<Matrix>> codegens_;
};

CosimplicialSpace constant_cosimplicial(int dim, int top_level);

/// Alternating sum of the cofaces out of level n.
Matrix moore_differential(const CosimplicialSpace& C, int n);

/// Exact check of every cosimplicial identity that fits under the top level.
CheckReport verify_cosimplicial(const CosimplicialSpace& C);

struct CochainComplex {
  std::vector<int> dims;
  std::vector<Matrix> differentials;  // [n]: level n -> level n+1
};

/// Cohomology dimensions H^0..H^{top-1}.  The top level has no outgoing
/// differential, so its cohomology is not determined by the data and is not
/// reported.  Throws std::logic_error if the differentials do not square to
/// zero.
std::vector<int> complex_cohomology(const CochainComplex& K);

struct NormalizedComplex {
  std::vector<Subspace> levels;  // N^n = intersection of codegeneracy kernels
  CochainComplex complex;        // Moore differential in the bases of levels
};

/// Conormalization N^n with its restricted differential.  Verifies that the
/// differential preserves N and that the cohomology of N matches the
/// cohomology of the full Moore complex.
NormalizedComplex conormalize(const CosimplicialSpace& C);

struct Cohomology {
  std::vector<int> dims;                          // H^0..H^{top-1}
  std::vector<std::vector<Vec>> representatives;  // cocycles in level coordinates
};

Cohomology cohomology(const CosimplicialSpace& C);

/// Level-wise associative unital algebra structure on a cosimplicial space.
/// mult[n] has shape dim(n) x dim(n)^2; column i*dim(n)+j holds the product
/// of basis vectors i and j.
class CosimplicialAlgebra {
public:
  CosimplicialAlgebra(CosimplicialSpace space, std::vector<Matrix> mult,
                      std::vector<Vec> unit);

  const CosimplicialSpace& space() const { return space_; }
  const Vec& unit(int level) const;
  Vec product(int level, const Vec& u, const Vec& v) const;
  Vec basis_product(int level, int i, int j) const;

private:
  CosimplicialSpace space_;
  std::vector<Matrix> mult_;
  std::vector<Vec> unit_;
};

/// Identities plus algebra axioms: associativity, commutativity and unit on
/// basis vectors, and multiplicativity of every coface and codegeneracy.
CheckReport verify_cosimplicial_algebra(const CosimplicialAlgebra& A);

/// Alexander-Whitney cup product of a level-n and a level-m cochain: the
/// final-coface image of u multiplied by the initial-coface image of v at
/// level n+m.  Products that would land above the top level are rejected.
Vec aw_cup(const CosimplicialAlgebra& A, int n, const Vec& u, int m, const Vec& v);

/// Hodge filtration step i: the intersection of the kernels of all
/// length-(n+1-i) codegeneracy composites at level n, the zero space for
/// n < i, and the whole space for i = 0.  Verified to be a cosimplicial
/// subobject before returning.
std::vector<Subspace> hodge_filtration(const CosimplicialSpace& C, int i);

}  // namespace malcev
