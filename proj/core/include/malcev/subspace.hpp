#pragma once

#include <optional>
#include <vector>

#include "malcev/matrix.hpp"

namespace malcev {

/// Linear subspace of Q^n held as the reduced row-echelon basis of its
/// spanning set.  The representation is canonical: two Subspace values are
/// equal exactly when they are the same subspace, so operator== is cheap
/// and safe to use for mathematical equality.
class Subspace {
public:
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Remainder of v after eliminating all pivot coordinates; zero iff v lies
  /// in the subspace.
  Vec reduce(const Vec& v) const;
  /// Coefficients of v in basis(), or nullopt if v is not a member.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Image under m (ambient must equal m.cols()).
  Subspace apply(const Matrix& m) const;

  bool operator==(const Subspace& o) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

private:
  Subspace() = default;
  int ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);

}  // namespace malcev
