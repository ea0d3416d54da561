#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "malcev/subspace.hpp"

namespace malcev {

struct Generator {
  std::string name;
  int weight = -1;  // must be <= -1
};

/// One basis vector of a graded Lie algebra.  For free algebras this is a
/// Hall word with its tree structure; quotient algebras keep the word name
/// and record how the class arises as a bracket (see Witness).
struct BasisElement {
  int degree = 1;
  int weight = -1;
  std::string name;
  int left = -1;        // Hall tree children as global indices, -1 for generators
  int right = -1;
  int generator = -1;   // generator index when degree == 1
};

class GradedLieAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

using SparseVec = std::map<int, Rational>;

/// Element of a graded Lie algebra, stored sparsely over the global basis.
/// Elements of different algebra instances never mix; mixing throws.
class LieElement {
public:
  explicit LieElement(AlgebraPtr alg);
  static LieElement basis(AlgebraPtr alg, int index);

  const AlgebraPtr& algebra() const { return alg_; }
  const SparseVec& coefficients() const { return coeff_; }
  bool is_zero() const { return coeff_.empty(); }
  Rational coefficient(int index) const;
  void set_coefficient(int index, const Rational& c);

  LieElement operator-() const;
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement scaled(const Rational& c) const;
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  bool operator==(const LieElement& o) const;

  /// Component of the element living in a single degree, as dense coordinates.
  Vec degree_coords(int degree) const;
  /// Dense coordinates over the whole algebra.
  Vec total_coords() const;
  bool homogeneous_degree(int* degree_out = nullptr) const;

  std::string str() const;

private:
  void check_same(const LieElement& o) const;
  AlgebraPtr alg_;
  SparseVec coeff_;
};

/// Finite-dimensional graded Lie algebra, truncated at a fixed nilpotency
/// class: brackets whose total degree exceeds the class bound are zero.
/// Instances are immutable after construction.
class GradedLieAlgebra : public std::enable_shared_from_this<GradedLieAlgebra> {
public:
  /// Free nilpotent Lie algebra on the given generators, truncated at
  /// class_bound.  The degree-d basis is the set of Hall words of length d
  /// in length-lexicographic order (degree first, then the recursive
  /// left/right comparison with ties broken by generator order).
  static AlgebraPtr free_nilpotent(const std::vector<Generator>& generators, int class_bound);

  /// Assembles an algebra from parts.  Used by quotient constructions;
  /// validates shapes only, callers are responsible for the Lie axioms
  /// (run verify_graded_lie to re-check them).
  struct Witness {  // how a basis class arises as a bracket of lower classes
    int left_degree = 0;
    Vec left;
    int right_degree = 0;
    Vec right;
  };
  static AlgebraPtr from_parts(std::vector<BasisElement> basis,
                               std::map<std::pair<int, int>, SparseVec> table,
                               int class_bound,
                               std::vector<std::optional<Witness>> witnesses);

  int class_bound() const { return class_bound_; }
  int num_degrees() const { return class_bound_; }
  int degree_dim(int degree) const;
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return static_cast<int>(basis_.size()); }
  int degree_offset(int degree) const;
  const BasisElement& element(int index) const;
  int generator_count() const { return degree_dim(1); }
  bool is_free() const { return free_; }
  const std::optional<Witness>& witness(int index) const;

  /// [e_a, e_b] as a sparse vector; zero beyond the class bound.
  SparseVec basis_bracket(int a, int b) const;

  LieElement zero() const;
  LieElement basis_element(int index) const;
  LieElement generator(const std::string& name) const;
  LieElement from_degree_coords(int degree, const Vec& coords) const;
  LieElement from_total_coords(const Vec& coords) const;

private:
  friend class LieElement;
  GradedLieAlgebra() = default;

  bool free_ = false;
  int class_bound_ = 0;
  std::vector<int> dims_;
  std::vector<int> offsets_;
  std::vector<BasisElement> basis_;
  std::vector<std::optional<Witness>> witnesses_;
  // structure constants for a < b with deg(a)+deg(b) <= class bound
  std::map<std::pair<int, int>, SparseVec> table_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

/// Number of Hall words of the given degree over an alphabet of
/// num_generators letters (necklace count by Moebius inversion).
long long witt_dim(int num_generators, int degree);

/// Lower central series Gamma_1 >= Gamma_2 >= ... >= Gamma_{N+1} = 0 as
/// canonical subspaces of the total space (index 0 holds Gamma_1).
std::vector<Subspace> lcs_filtration(const GradedLieAlgebra& alg);

/// Embeds degree-d coordinates into total-space coordinates.
Vec embed_degree(const GradedLieAlgebra& alg, int degree, const Vec& coords);

struct LieCheckReport {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Re-checks antisymmetry conventions, the Jacobi identity on all basis
/// triples within the class bound, and weight additivity of the bracket.
LieCheckReport verify_graded_lie(const GradedLieAlgebra& alg);

}  // namespace malcev
