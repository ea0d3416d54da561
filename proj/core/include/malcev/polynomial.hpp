#pragma once

#include <string>
#include <utility>
#include <vector>

#include "malcev/matrix.hpp"

namespace malcev {

/// Dense univariate polynomial over Q, coefficients low degree first,
/// no trailing zero coefficient.  The zero polynomial has degree -1.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& c0);
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial variable();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational eval(const Rational& x) const;
  Matrix eval(const Matrix& m) const;
  Polynomial pow(int e) const;
  /// p(c*T)
  Polynomial scale_variable(const Rational& c) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  /// (quotient, remainder); divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  std::string str(const std::string& var = "T") const;

  /// Monic gcd.
  static Polynomial gcd(Polynomial a, Polynomial b);

private:
  void trim();
  std::vector<Rational> c_;
};

/// Yun squarefree decomposition: pairwise-coprime monic factors with their
/// multiplicities, product (up to the leading coefficient) the input.
std::vector<std::pair<Polynomial, int>> squarefree_factors(const Polynomial& p);

/// Characteristic polynomial det(T*I - m), monic, by the Faddeev-LeVerrier
/// recurrence (exact over Q).
Polynomial char_poly(const Matrix& m);

}  // namespace malcev
