#include "malcev/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace malcev {

Polynomial::Polynomial(const Rational& c0) {
  if (!c0.is_zero()) c_.push_back(c0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::variable() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
  return c_[k];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("Polynomial::leading: zero polynomial");
  return c_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("Polynomial::monic: zero polynomial");
  return scaled(leading().reciprocal());
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Polynomial(std::move(d));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::eval(const Matrix& m) const {
  if (m.rows() != m.cols()) throw std::invalid_argument("Polynomial::eval: matrix not square");
  Matrix acc(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * m;
    if (!it->is_zero())
      acc = acc + Matrix::identity(m.rows()).scaled(*it);
  }
  return acc;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
  Polynomial acc(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::scale_variable(const Rational& c) const {
  std::vector<Rational> out(c_.size());
  Rational p(1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    out[k] = c_[k] * p;
    p *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(Rational(-1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c * c_[k];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero polynomial");
  Polynomial rem = *this;
  std::vector<Rational> quot;
  int dd = d.degree();
  if (rem.degree() >= dd) quot.assign(rem.degree() - dd + 1, Rational());
  Rational lead_inv = d.leading().reciprocal();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Rational f = rem.leading() * lead_inv;
    quot[shift] = f;
    std::vector<Rational> rc = rem.c_;
    for (int k = 0; k <= dd; ++k) rc[shift + k] -= f * d.c_[k];
    rem = Polynomial(std::move(rc));
  }
  return {Polynomial(std::move(quot)), rem};
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    bool unit = a == Rational(1);
    if (k == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_factors(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_factors: zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial f = p.monic();
  if (f.degree() == 0) return out;
  // Yun's algorithm
  Polynomial fp = f.derivative();
  Polynomial a = Polynomial::gcd(f, fp);
  Polynomial b = f.divmod(a).first;
  Polynomial c = fp.divmod(a).first;
  Polynomial d = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    Polynomial g = Polynomial::gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, mult);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

Polynomial char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  int n = m.rows();
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = Rational(1);
  // M_k = A*M_{k-1} + c_{n-k+1}*I, c_{n-k} = -tr(A*M_k)/k
  Matrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + Matrix::identity(n).scaled(coeffs[n - k + 1]);
    Matrix am = m * mk;
    Rational tr;
    for (int i = 0; i < n; ++i) tr += am.at(i, i);
    coeffs[n - k] = -(tr / Rational(k));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace malcev
