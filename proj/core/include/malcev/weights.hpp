#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "malcev/lie_algebra.hpp"
#include "malcev/polynomial.hpp"
#include "malcev/subspace.hpp"

namespace malcev {

/// Thrown when the numeric root enclosures cannot certify any answer at the
/// requested tolerance: no candidate norm matches, precision ran out, or a
/// weight falls outside the scanned range.  CLI maps this to exit code 4.
struct InconclusiveClassification : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a factor is certified to mix root norms, so no single weight
/// exists.  This is an invariant violation of the input (CLI exit code 3).
struct NotPureFactor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeilOptions {
  long long q = 0;          // prime power, >= 2
  double tol = 1e-6;        // relative half-width around each candidate norm
  int max_abs_weight = 24;  // scan |w| up to this bound
};

struct ClassifiedFactor {
  Polynomial factor;
  int multiplicity = 1;
  std::optional<int> weight;  // nullopt: certified mixed norms (not pure)
};

/// Assigns to each squarefree factor the integer w such that every root has
/// norm q^{w/2} within tolerance.  A factor whose roots certifiably differ
/// in norm gets weight nullopt; when neither a weight nor a mixed-norm
/// certificate can be produced, throws InconclusiveClassification.  Throws
/// std::invalid_argument when the tolerance is too coarse to separate
/// adjacent half-integer powers of q, or on non-squarefree factors.
std::vector<ClassifiedFactor> weil_classify(
    const std::vector<std::pair<Polynomial, int>>& factors, const WeilOptions& opt);

/// Linear Frobenius data: one invertible matrix per graded degree when
/// attached to an algebra, or a single matrix on a plain space.
struct FrobeniusAction {
  long long q = 0;
  int r = 1;  // informational: q = p^r
  std::vector<Matrix> matrices;
};

/// F-stable decomposition of one space by root norm of the characteristic
/// polynomial: piece w collects the generalized eigenspaces of all
/// eigenvalues of norm q^{w/2}.
struct WeightDecomposition {
  int ambient_dim = 0;
  std::map<int, Subspace> pieces;

  int total_dim() const;
};

/// Splits the whole space by weight.  The characteristic polynomial is
/// factored squarefree, each squarefree part is split into weight classes
/// through certified root groupings, and the pieces are exact kernels of the
/// rational class polynomials evaluated at F.  Purity of each rational
/// irreducible factor is certified by integer reconstruction of the class
/// polynomials; mixed factors raise NotPureFactor, undecidable groupings
/// raise InconclusiveClassification.
WeightDecomposition frobenius_weight_decomposition(const Matrix& F, const WeilOptions& opt);

/// Extends a degree-1 action to every degree through brackets: a basis class
/// arising as [u, v] maps to [F u, F v].  The result is validated to be
/// bracket-compatible; throws std::invalid_argument when the degree-1 map
/// does not descend coherently.
std::vector<Matrix> extend_frobenius(const AlgebraPtr& alg, const Matrix& degree1);

/// Per-degree weight decompositions of an algebra-wide action (index d-1).
std::vector<WeightDecomposition> algebra_weight_decomposition(const AlgebraPtr& alg,
                                                              const FrobeniusAction& F,
                                                              const WeilOptions& opt);

/// Verifies bracket compatibility of F itself and the additivity
/// [piece_i, piece_j] inside piece_{i+j} on every degree pair.  Failures are
/// reported, not thrown.
LieCheckReport check_bracket_additivity(const AlgebraPtr& alg, const FrobeniusAction& F,
                                        const std::vector<WeightDecomposition>& decomp);

/// Increasing filtration of the total space by weight.  Levels are stored
/// for n from the top (-1, the whole space) down to the first zero level;
/// at(n) clamps outside the stored range.
struct WeightFiltration {
  int ambient_dim = 0;
  std::map<int, Subspace> levels;

  const Subspace& at(int n) const;
  int lowest() const;  // smallest stored level index
};

/// Smallest filtration with W_{-1} = everything, the chosen degree-1
/// generators in W_{-2}, and [W_m, W_n] inside W_{m+n}.  k_generators lives
/// in degree-1 coordinates; the levels are subspaces of the total space.
WeightFiltration weight_filtration(const AlgebraPtr& alg, const Subspace& k_generators);

/// Verifies W_n = direct sum of pieces i <= n at every level, with the
/// per-degree decomposition embedded into the total space.
LieCheckReport check_splitting(const AlgebraPtr& alg,
                               const std::vector<WeightDecomposition>& decomp,
                               const WeightFiltration& filt);

/// Verifies each filtration step W_i / W_{i-1} is carried exactly by piece
/// i: the piece sits inside W_i, meets W_{i-1} trivially, and fills the
/// graded dimension.
LieCheckReport purity_report(const AlgebraPtr& alg,
                             const std::vector<WeightDecomposition>& decomp,
                             const WeightFiltration& filt);

}  // namespace malcev
