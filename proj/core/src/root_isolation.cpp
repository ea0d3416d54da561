#include "malcev/root_isolation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace malcev {

namespace {

using Cx = std::complex<double>;

Cx horner(const std::vector<double>& c, Cx z) {
  Cx acc(0.0, 0.0);
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) acc = acc * z + c[k];
  return acc;
}

// Bound on the accumulated evaluation error of horner at z.
double horner_error(const std::vector<double>& c, Cx z) {
  double az = std::abs(z);
  double acc = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    acc = acc * az + std::abs(c[k]);
  return acc * static_cast<double>(2 * c.size()) * std::numeric_limits<double>::epsilon();
}

}  // namespace

std::vector<RootDisc> isolate_roots(const Polynomial& p) {
  if (p.degree() < 1)
    throw std::invalid_argument("isolate_roots: polynomial must have degree >= 1");
  if (Polynomial::gcd(p, p.derivative()).degree() > 0)
    throw std::invalid_argument("isolate_roots: polynomial has repeated roots");

  Polynomial m = p.monic();
  const int n = m.degree();
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = m.coeff(k).to_double();

  // Cauchy bound: all roots lie in |z| <= 1 + max |a_k|.
  double bound = 0.0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k]));
  bound += 1.0;

  std::vector<Cx> z(n);
  for (int k = 0; k < n; ++k) {
    double angle = 2.0 * M_PI * k / n + 0.4;  // offset breaks symmetric traps
    z[k] = bound * Cx(std::cos(angle), std::sin(angle));
  }

  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Cx denom(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == Cx(0.0, 0.0)) {
        z[i] += Cx(1e-8, 1e-8);  // nudge a collision apart
        worst = 1.0;
        continue;
      }
      Cx w = horner(c, z[i]) / denom;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }

  std::vector<RootDisc> out(n);
  for (int i = 0; i < n; ++i) {
    double denom = 1.0;
    for (int j = 0; j < n; ++j)
      if (j != i) denom *= std::abs(z[i] - z[j]);
    double residual = std::abs(horner(c, z[i])) + horner_error(c, z[i]);
    double radius = denom > 0.0 ? 2.0 * n * residual / denom
                                : std::numeric_limits<double>::infinity();
    out[i] = RootDisc{z[i], radius};
  }
  return out;
}

}  // namespace malcev
