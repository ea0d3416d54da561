#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malcev/bch.hpp"
#include "malcev/lie_algebra.hpp"

namespace malcev {

/// Rational cohomology stand-in for a variety: dimensions and weights of the
/// first two cohomology spaces plus the cup product pairing.  cup[k] is the
/// antisymmetric matrix of coefficients of e_i cup e_j along the k-th basis
/// vector of the second space.
struct CohomologyDatum {
  std::optional<long long> q;   // informational prime power, if any
  int h1_dim = 0;
  std::vector<int> h1_weights;  // positive, one per basis vector
  int h2_dim = 0;
  std::vector<int> h2_weights;
  std::vector<Matrix> cup;      // h2_dim matrices, each h1_dim x h1_dim

  /// Throws std::invalid_argument on shape mismatches, non-antisymmetric cup
  /// tables, or entries violating weight additivity.
  void validate() const;
};

/// Datum for a smooth variety presented as a compactification minus a
/// boundary divisor.  The weight-1 part of degree-1 cohomology comes from
/// the compactification, the weight-2 part from boundary components.
struct OpenVarietyDatum {
  std::optional<long long> q;
  int h1_compact_dim = 0;
  int boundary_dim = 0;
  int h2_dim = 0;
  std::vector<Matrix> cup;

  /// Weights are 1 on the compact part, then 2 on the boundary part.  H^2
  /// weights are inferred from the cup entries; a vector with a zero cup
  /// column defaults to weight 2 (its relation is zero and gets dropped).
  CohomologyDatum to_cohomology() const;
};

struct Presentation {
  AlgebraPtr free_algebra;            // free nilpotent on the degree-1 dual basis
  std::vector<LieElement> relations;  // nonzero homogeneous relations
  std::vector<int> dropped;           // indices whose relation was zero
  std::vector<Subspace> ideal;        // ideal[d-1] inside degree-d coordinates
  AlgebraPtr quotient;
  LieHom projection;                  // free_algebra onto quotient
};

/// One relation per basis vector of the second cohomology space:
///   r_k = sum over i < j of cup[k](i,j) [x_i, x_j].
/// Relations may come out zero; build_presentation drops those and records
/// their indices.
std::vector<LieElement> dual_cup_relations(const AlgebraPtr& free_algebra,
                                           const CohomologyDatum& d);

/// Graded ideal generated by homogeneous relations of degree >= 2:
///   J_d = span(degree-d relations) + [generators, J_{d-1}].
/// Returned per degree 1..N (J_1 is always zero).  Throws on inhomogeneous
/// or degree-1 relations.
std::vector<Subspace> ideal_closure(const AlgebraPtr& free_algebra,
                                    const std::vector<LieElement>& relations);

struct QuotientResult {
  AlgebraPtr algebra;
  LieHom projection;
};

/// Quotient of a free algebra by a graded ideal.  Verifies the ideal
/// property first and re-checks the Lie axioms on the result; the projection
/// doubles as a bracket-compatibility witness (its constructor validates).
QuotientResult quotient_algebra(const AlgebraPtr& free_algebra,
                                const std::vector<Subspace>& ideal);

/// Full pipeline: validate, build the free algebra on generators x1..xk of
/// weight -h1_weights[i], emit relations, close the ideal, quotient.
Presentation build_presentation(const CohomologyDatum& d, int class_bound);

/// Structural self-check: the projection is surjective in every degree and
/// the identity map in degree 1.
LieCheckReport tangent_surjection_check(const Presentation& p);

}  // namespace malcev
