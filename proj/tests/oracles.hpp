#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's algorithms; inputs are plain cell lists and matrices.

#include "ncmorse/cell_complex.hpp"
#include "ncmorse/integer_matrix.hpp"
#include "ncmorse/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using ncmorse::Integer;
using ncmorse::Rational;

// Laplace expansion; only for tiny matrices.
inline Integer determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    det += (c % 2 == 0 ? 1 : -1) * m[0][c] * determinant(minor);
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

// gcd of all k x k minors
inline Integer determinantal_divisor(const ncmorse::IntegerMatrix& m, std::size_t k) {
  Integer g = 0;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(determinant(sub)));
    });
  });
  return g;
}

// Invariant factors d_k = D_k / D_{k-1}, stopping at the first vanishing D_k.
inline std::vector<Integer> invariant_factors(const ncmorse::IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const Integer d = determinantal_divisor(m, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

// Plain Gaussian elimination over Q.
inline std::size_t rank(const ncmorse::IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Boundary matrix d_k built straight from the cell list (rows: (k-1)-cells, cols: k-cells).
inline ncmorse::IntegerMatrix boundary(const std::vector<ncmorse::Cell>& cells, int k) {
  std::vector<std::string> rows, cols;
  for (const auto& c : cells) {
    if (c.dim == k - 1) rows.push_back(c.id);
    if (c.dim == k) cols.push_back(c.id);
  }
  ncmorse::IntegerMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& c : cells)
      if (c.id == cols[j])
        for (const auto& inc : c.boundary) {
          const auto it = std::find(rows.begin(), rows.end(), inc.face);
          m(static_cast<std::size_t>(it - rows.begin()), j) += inc.degree;
        }
  return m;
}

// Betti numbers over Q.
inline std::vector<std::size_t> betti(const std::vector<ncmorse::Cell>& cells) {
  int top = -1;
  for (const auto& c : cells) top = std::max(top, c.dim);
  std::vector<std::size_t> b;
  for (int k = 0; k <= top; ++k) {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.dim == k ? 1 : 0;
    const std::size_t out = k == 0 ? 0 : rank(boundary(cells, k));
    const std::size_t in = k == top ? 0 : rank(boundary(cells, k + 1));
    b.push_back(n - out - in);
  }
  return b;
}

// Facets and cofacets read directly from the boundary lists.
struct Neighbours {
  std::map<std::string, std::set<std::string>> facets, cofacets;
  std::map<std::string, int> dim;
};

inline Neighbours neighbours(const std::vector<ncmorse::Cell>& cells) {
  Neighbours n;
  for (const auto& c : cells) {
    n.dim[c.id] = c.dim;
    n.facets[c.id];
    n.cofacets[c.id];
  }
  for (const auto& c : cells)
    for (const auto& inc : c.boundary) {
      n.facets[c.id].insert(inc.face);
      n.cofacets[inc.face].insert(c.id);
    }
  return n;
}

// At most one cofacet at or below and one facet at or above each chain.
inline bool is_modified_morse(const std::vector<ncmorse::Cell>& cells, const std::map<std::string, Rational>& f) {
  const auto n = neighbours(cells);
  for (const auto& c : cells) {
    const Rational v = f.at("W_" + c.id);
    int low_up = 0, high_down = 0;
    for (const auto& u : n.cofacets.at(c.id)) low_up += f.at("W_" + u) <= v ? 1 : 0;
    for (const auto& d : n.facets.at(c.id)) high_down += f.at("W_" + d) >= v ? 1 : 0;
    if (low_up > 1 || high_down > 1) return false;
  }
  return true;
}

// Critical chains; strict = forman reading.
inline std::set<std::string> critical(const std::vector<ncmorse::Cell>& cells, const std::map<std::string, Rational>& f,
                                      bool strict) {
  const auto n = neighbours(cells);
  std::set<std::string> out;
  for (const auto& c : cells) {
    const Rational v = f.at("W_" + c.id);
    bool ok = true;
    for (const auto& u : n.cofacets.at(c.id)) ok = ok && (strict ? f.at("W_" + u) > v : f.at("W_" + u) >= v);
    for (const auto& d : n.facets.at(c.id)) ok = ok && (strict ? f.at("W_" + d) < v : f.at("W_" + d) <= v);
    if (ok) out.insert("W_" + c.id);
  }
  return out;
}

// Cycle detection by transitive closure of the modified Hasse digraph.
inline bool matching_has_cycle(const std::vector<ncmorse::Cell>& cells,
                               const std::set<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::string> ids;
  for (const auto& c : cells) ids.push_back(c.id);
  const std::size_t n = ids.size();
  auto idx = [&](const std::string& id) { return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin()); };
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (const auto& c : cells)
    for (const auto& inc : c.boundary) {
      const bool matched = pairs.contains({"W_" + inc.face, "W_" + c.id});
      if (matched)
        reach[idx(inc.face)][idx(c.id)] = 1;
      else
        reach[idx(c.id)][idx(inc.face)] = 1;
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (reach[i][i]) return true;
  return false;
}

// Face closure by recursion over boundary lists.
inline std::set<std::string> face_closure(const std::vector<ncmorse::Cell>& cells, const std::string& id) {
  std::set<std::string> out{id};
  for (const auto& c : cells)
    if (c.id == id)
      for (const auto& inc : c.boundary) {
        const auto sub = face_closure(cells, inc.face);
        out.insert(sub.begin(), sub.end());
      }
  return out;
}

}  // namespace oracle
