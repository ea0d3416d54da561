#pragma once

#include "malcev/lie_algebra.hpp"

namespace malcev {

/// log(exp x * exp y) by the Dynkin series, truncated at the class bound of
/// the ambient algebra.  Exact; the series is finite because every nested
/// bracket of length beyond the class vanishes.
LieElement bch(const LieElement& x, const LieElement& y);

/// Group inverse under the BCH product: the log of the inverse is -x.
LieElement group_inverse(const LieElement& x);

/// Degree-preserving Lie algebra homomorphism, one matrix per degree of the
/// source algebra.  Degrees beyond the target's class bound map to zero.
/// The constructor verifies compatibility with brackets on basis pairs.
class LieHom {
public:
  LieHom(AlgebraPtr from, AlgebraPtr to, std::vector<Matrix> per_degree);
  static LieHom identity(const AlgebraPtr& alg);
  static LieHom zero(const AlgebraPtr& from, const AlgebraPtr& to);
  /// Projection of a free algebra onto its degree-1 part viewed as a free
  /// class-1 (abelian) algebra on the same generators.
  static LieHom abelianization(const AlgebraPtr& from);

  const AlgebraPtr& from() const { return from_; }
  const AlgebraPtr& to() const { return to_; }
  /// Matrix of the map on the given source degree (rows may be zero when the
  /// degree exceeds the target's class bound).
  const Matrix& degree_matrix(int degree) const;
  LieElement apply(const LieElement& e) const;

private:
  AlgebraPtr from_, to_;
  std::vector<Matrix> per_degree_;  // index d-1; empty matrix means zero map
};

/// Unipotent group element, carried by the log coordinates of its algebra.
class GroupElement {
public:
  explicit GroupElement(LieElement log) : log_(std::move(log)) {}
  static GroupElement identity(const AlgebraPtr& alg) { return GroupElement(alg->zero()); }

  const LieElement& log() const { return log_; }
  GroupElement operator*(const GroupElement& o) const { return GroupElement(bch(log_, o.log_)); }
  GroupElement inverse() const { return GroupElement(group_inverse(log_)); }
  bool operator==(const GroupElement& o) const { return log_ == o.log_; }

private:
  LieElement log_;
};

/// Transports a group element along a homomorphism of the underlying
/// algebras; group multiplication commutes with the transport.
GroupElement push_forward(const LieHom& hom, const GroupElement& g);

}  // namespace malcev
