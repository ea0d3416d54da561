#include "malcev/cech.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace malcev {

namespace {

using Key = std::vector<int>;

std::string key_str(const Key& k) {
  std::string s = "{";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + "}";
}

Key support(const std::vector<int>& tuple) {
  Key s(tuple);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

struct Nerve {
  std::map<Key, int> dims;                              // nonempty patches only
  std::map<std::pair<Key, Key>, Matrix> adjacent;       // single-open refinements
  std::map<std::pair<Key, Key>, Matrix> composite;      // memoized S -> T maps

  // Composite restriction along any chain of single-open refinements.  All
  // chains are compared, which is exactly the functoriality requirement.
  const Matrix& restriction(const Key& from, const Key& to) {
    auto it = composite.find({from, to});
    if (it != composite.end()) return it->second;
    if (from == to)
      return composite.emplace(std::make_pair(from, to), Matrix::identity(dims.at(from)))
          .first->second;
    std::optional<Matrix> agreed;
    for (int u : to) {
      if (std::binary_search(from.begin(), from.end(), u)) continue;
      Key mid = to;
      mid.erase(std::find(mid.begin(), mid.end(), u));
      Matrix candidate = adjacent.at({mid, to}) * restriction(from, mid);
      if (!agreed)
        agreed = std::move(candidate);
      else if (!(*agreed == candidate))
        throw std::invalid_argument("cech_build: restriction maps are not functorial between " +
                                    key_str(from) + " and " + key_str(to));
    }
    return composite.emplace(std::make_pair(from, to), std::move(*agreed)).first->second;
  }
};

// every row of a component-refinement map places a target component inside
// exactly one source component
void check_component_map(const Matrix& m, const Key& from, const Key& to) {
  for (int r = 0; r < m.rows(); ++r) {
    int hits = 0;
    for (const auto& [c, v] : m.row(r)) {
      (void)c;
      if (!(v == Rational(1)))
        throw std::invalid_argument("cech_build: restriction " + key_str(from) + " -> " +
                                    key_str(to) + " is not an algebra homomorphism");
      ++hits;
    }
    if (hits != 1)
      throw std::invalid_argument("cech_build: restriction " + key_str(from) + " -> " +
                                  key_str(to) + " is not an algebra homomorphism");
  }
}

}  // namespace

CosimplicialAlgebra cech_build(const CechInput& input, int top_level) {
  if (top_level < 0) throw std::invalid_argument("cech_build: negative top level");
  if (input.open_count < 1) throw std::invalid_argument("cech_build: need at least one open");

  Nerve nerve;
  std::set<Key> seen;
  for (const CechPatch& p : input.patches) {
    if (p.opens.empty()) throw std::invalid_argument("cech_build: empty patch index set");
    for (std::size_t i = 0; i < p.opens.size(); ++i) {
      if (p.opens[i] < 0 || p.opens[i] >= input.open_count)
        throw std::invalid_argument("cech_build: open index out of range in patch " +
                                    key_str(p.opens));
      if (i && p.opens[i] <= p.opens[i - 1])
        throw std::invalid_argument("cech_build: patch indices must be strictly increasing: " +
                                    key_str(p.opens));
    }
    if (p.dim < 0) throw std::invalid_argument("cech_build: negative patch dimension");
    if (!seen.insert(p.opens).second)
      throw std::invalid_argument("cech_build: duplicate patch " + key_str(p.opens));
    if (p.dim > 0) nerve.dims.emplace(p.opens, p.dim);
  }
  for (const auto& [k, d] : nerve.dims) {
    (void)d;
    if (k.size() < 2) continue;
    for (std::size_t drop = 0; drop < k.size(); ++drop) {
      Key sub = k;
      sub.erase(sub.begin() + drop);
      if (!nerve.dims.count(sub))
        throw std::invalid_argument("cech_build: intersection " + key_str(k) +
                                    " is nonempty but its subintersection " + key_str(sub) +
                                    " is empty");
    }
  }

  for (const CechRestriction& r : input.restrictions) {
    auto fit = nerve.dims.find(r.from);
    auto tit = nerve.dims.find(r.to);
    if (fit == nerve.dims.end() || tit == nerve.dims.end())
      throw std::invalid_argument("cech_build: restriction between unknown patches " +
                                  key_str(r.from) + " -> " + key_str(r.to));
    if (r.to.size() != r.from.size() + 1 ||
        !std::includes(r.to.begin(), r.to.end(), r.from.begin(), r.from.end()))
      throw std::invalid_argument("cech_build: restriction must refine by exactly one open: " +
                                  key_str(r.from) + " -> " + key_str(r.to));
    if (r.map.rows() != tit->second || r.map.cols() != fit->second)
      throw std::invalid_argument("cech_build: restriction shape mismatch for " +
                                  key_str(r.from) + " -> " + key_str(r.to));
    check_component_map(r.map, r.from, r.to);
    if (!nerve.adjacent.emplace(std::make_pair(r.from, r.to), r.map).second)
      throw std::invalid_argument("cech_build: duplicate restriction " + key_str(r.from) +
                                  " -> " + key_str(r.to));
  }
  for (const auto& [t, td] : nerve.dims) {
    (void)td;
    if (t.size() < 2) continue;
    for (std::size_t drop = 0; drop < t.size(); ++drop) {
      Key sub = t;
      sub.erase(sub.begin() + drop);
      if (!nerve.adjacent.count({sub, t}))
        throw std::invalid_argument("cech_build: missing restriction " + key_str(sub) + " -> " +
                                    key_str(t));
    }
  }
  // force every composite so that disagreeing refinement paths surface as
  // input errors here rather than as identity failures after assembly
  for (const auto& [s, sd] : nerve.dims) {
    (void)sd;
    for (const auto& [t, td] : nerve.dims) {
      (void)td;
      if (t.size() < s.size() + 2) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) nerve.restriction(s, t);
    }
  }

  if (std::pow(static_cast<double>(input.open_count), top_level + 1) > 2e6)
    throw std::invalid_argument("cech_build: cover too large for the requested level");

  std::vector<std::vector<std::vector<int>>> tuples(top_level + 1);
  std::vector<std::map<std::vector<int>, int>> offset(top_level + 1);
  std::vector<int> dims(top_level + 1, 0);
  for (int n = 0; n <= top_level; ++n) {
    std::vector<int> t(n + 1, 0);
    while (true) {
      auto it = nerve.dims.find(support(t));
      if (it != nerve.dims.end()) {
        offset[n].emplace(t, dims[n]);
        tuples[n].push_back(t);
        dims[n] += it->second;
      }
      int pos = n;
      while (pos >= 0 && t[pos] == input.open_count - 1) {
        t[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++t[pos];
    }
    if (dims[n] == 0)
      throw std::invalid_argument("cech_build: no nonempty patch contributes to level " +
                                  std::to_string(n));
    if (dims[n] > 20000)
      throw std::invalid_argument("cech_build: level " + std::to_string(n) +
                                  " dimension exceeds the supported size");
  }

  std::vector<std::vector<Matrix>> cofaces(top_level);
  for (int n = 0; n < top_level; ++n) {
    cofaces[n].assign(n + 2, Matrix(dims[n + 1], dims[n]));
    for (const auto& tp : tuples[n + 1]) {
      Key sup = support(tp);
      int row0 = offset[n + 1].at(tp);
      for (int i = 0; i <= n + 1; ++i) {
        std::vector<int> src = tp;
        src.erase(src.begin() + i);
        int col0 = offset[n].at(src);
        const Matrix& block = nerve.restriction(support(src), sup);
        for (int r = 0; r < block.rows(); ++r)
          for (const auto& [c, v] : block.row(r)) cofaces[n][i].set(row0 + r, col0 + c, v);
      }
    }
  }
  std::vector<std::vector<Matrix>> codegens(top_level);
  for (int n = 1; n <= top_level; ++n) {
    codegens[n - 1].assign(n, Matrix(dims[n - 1], dims[n]));
    for (const auto& tp : tuples[n - 1]) {
      int row0 = offset[n - 1].at(tp);
      int d = nerve.dims.at(support(tp));
      for (int j = 0; j <= n - 1; ++j) {
        std::vector<int> src = tp;
        src.insert(src.begin() + j, tp[j]);
        int col0 = offset[n].at(src);
        for (int r = 0; r < d; ++r) codegens[n - 1][j].set(row0 + r, col0 + r, Rational(1));
      }
    }
  }

  std::vector<Matrix> mult;
  std::vector<Vec> unit;
  for (int n = 0; n <= top_level; ++n) {
    Matrix m(dims[n], dims[n] * dims[n]);
    for (int a = 0; a < dims[n]; ++a) m.set(a, a * dims[n] + a, Rational(1));
    mult.push_back(std::move(m));
    unit.push_back(Vec(dims[n], Rational(1)));
  }

  CosimplicialSpace space(std::move(dims), std::move(cofaces), std::move(codegens));
  CheckReport rep = verify_cosimplicial(space);
  if (!rep.pass)
    throw std::logic_error("cech_build: constructed object violates the cosimplicial identities: " +
                           rep.failures.front());
  return CosimplicialAlgebra(std::move(space), std::move(mult), std::move(unit));
}

CosimplicialAlgebra bar_complex(int group_order, int top_level) {
  if (group_order < 1) throw std::invalid_argument("bar_complex: group order must be positive");
  if (top_level < 0) throw std::invalid_argument("bar_complex: negative top level");

  CechInput in;
  in.open_count = group_order;
  int max_size = std::min(group_order, top_level + 1);
  // all subsets of the group of each size up to the largest tuple support
  std::vector<Key> frontier = {Key{}};
  for (int size = 1; size <= max_size; ++size) {
    std::vector<Key> next;
    for (const Key& base : frontier)
      for (int g = base.empty() ? 0 : base.back() + 1; g < group_order; ++g) {
        Key k = base;
        k.push_back(g);
        in.patches.push_back({k, 1});
        for (std::size_t drop = 0; size >= 2 && drop < k.size(); ++drop) {
          Key sub = k;
          sub.erase(sub.begin() + drop);
          in.restrictions.push_back({sub, k, Matrix::identity(1)});
        }
        next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return cech_build(in, top_level);
}

}  // namespace malcev
