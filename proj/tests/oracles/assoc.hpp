#pragma once

// Truncated free associative algebra over Q, used as an independent check of
// the Dynkin-series BCH product: log(exp x * exp y) computed here by plain
// power series must match the bracket-side computation after expanding every
// Hall tree into associative words ([u,v] -> uv - vu).

#include <cassert>
#include <map>
#include <vector>

#include "malcev/lie_algebra.hpp"

namespace oracle {

using malcev::Rational;

struct Assoc {
  int bound = 0;                                 // words longer than this vanish
  std::map<std::vector<int>, Rational> terms;    // word -> coefficient, no zeros

  void add(const std::vector<int>& w, const Rational& c) {
    if (static_cast<int>(w.size()) > bound || c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }

  bool operator==(const Assoc& o) const { return bound == o.bound && terms == o.terms; }
};

inline Assoc assoc_zero(int bound) { return {bound, {}}; }

inline Assoc assoc_word(int bound, const std::vector<int>& w,
                        const Rational& c = Rational(1)) {
  Assoc a{bound, {}};
  a.add(w, c);
  return a;
}

inline Assoc operator+(const Assoc& a, const Assoc& b) {
  assert(a.bound == b.bound);
  Assoc r = a;
  for (const auto& [w, c] : b.terms) r.add(w, c);
  return r;
}

inline Assoc operator*(const Assoc& a, const Assoc& b) {
  assert(a.bound == b.bound);
  Assoc r{a.bound, {}};
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      if (static_cast<int>(wa.size() + wb.size()) > a.bound) continue;
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

inline Assoc scale(const Assoc& a, const Rational& c) {
  Assoc r{a.bound, {}};
  for (const auto& [w, v] : a.terms) r.add(w, v * c);
  return r;
}

// exp of an element with no constant term.
inline Assoc assoc_exp(const Assoc& x) {
  assert(!x.terms.count({}));
  Assoc r = assoc_word(x.bound, {});
  Assoc p = assoc_word(x.bound, {});
  Rational fact(1);
  for (int i = 1; i <= x.bound; ++i) {
    p = p * x;
    fact *= Rational(i);
    r = r + scale(p, Rational(1) / fact);
  }
  return r;
}

// log of an element with constant term 1.
inline Assoc assoc_log(const Assoc& a) {
  Assoc u = a;
  auto one = u.terms.find({});
  assert(one != u.terms.end() && one->second == Rational(1));
  u.terms.erase(one);
  Assoc r = assoc_zero(a.bound);
  Assoc p = assoc_word(a.bound, {});
  for (int i = 1; i <= a.bound; ++i) {
    p = p * u;
    r = r + scale(p, Rational((i % 2) ? 1 : -1) / Rational(i));
  }
  return r;
}

// Image of a basis element's Hall tree under [u,v] -> uv - vu; generators map
// to the length-1 word of their own index.
inline std::vector<Assoc> basis_images(const malcev::GradedLieAlgebra& alg) {
  std::vector<Assoc> images;
  const int bound = alg.class_bound();
  for (int i = 0; i < alg.total_dim(); ++i) {
    const auto& el = alg.element(i);
    if (el.degree == 1) {
      images.push_back(assoc_word(bound, {i}));
    } else {
      const Assoc& l = images[el.left];
      const Assoc& r = images[el.right];
      images.push_back(l * r + scale(r * l, Rational(-1)));
    }
  }
  return images;
}

inline Assoc expand(const malcev::LieElement& e) {
  const auto& alg = *e.algebra();
  std::vector<Assoc> images = basis_images(alg);
  Assoc out = assoc_zero(alg.class_bound());
  for (int i = 0; i < alg.total_dim(); ++i) {
    Rational c = e.coefficient(i);
    if (!c.is_zero()) out = out + scale(images[i], c);
  }
  return out;
}

}  // namespace oracle
