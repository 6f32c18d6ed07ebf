#pragma once

// Independent brute-force oracles for the test suites. None of these call the
// algorithm they are used to check.

#include "toric/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace toric::testing {

using Q = boost::multiprecision::cpp_rational;

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rational_rank(const std::vector<std::vector<Int>>& rows_in) {
  if (rows_in.empty()) return 0;
  std::vector<std::vector<Q>> rows;
  for (const auto& r : rows_in) rows.emplace_back(r.begin(), r.end());
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Q f = rows[i][c] / rows[rank][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Int>> rows_of(const IntegerMatrix& m) {
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return rows;
}

inline std::vector<std::vector<Int>> rows_of(const std::vector<LatticeVector>& vs) {
  std::vector<std::vector<Int>> rows;
  for (const auto& v : vs) rows.emplace_back(v.begin(), v.end());
  return rows;
}

/// Calls f on every vector of [lo, hi]^n.
inline void for_each_in_box(std::size_t n, Int lo, Int hi, const std::function<void(const LatticeVector&)>& f) {
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo;
  for (;;) {
    f(v);
    std::size_t j = 0;
    while (j < n && v[j] == hi) v[j++] = lo;
    if (j == n) return;
    ++v[j];
  }
}

/// Nonzero kernel vectors in [-box, box]^n.
inline std::vector<LatticeVector> kernel_in_box(const IntegerMatrix& a, Int box) {
  std::vector<LatticeVector> out;
  for_each_in_box(a.cols(), -box, box, [&](const LatticeVector& v) {
    if (!v.is_zero() && a.apply(v).is_zero()) out.push_back(v);
  });
  return out;
}

/// Some nonzero nonnegative kernel vector in [0, box]^n?
inline bool has_nonnegative_kernel_vector(const IntegerMatrix& a, Int box) {
  bool found = false;
  for_each_in_box(a.cols(), 0, box, [&](const LatticeVector& v) {
    if (!found && !v.is_zero() && a.apply(v).is_zero()) found = true;
  });
  return found;
}

/// All t in [0, box]^n with A t = degree, sorted.
inline std::vector<LatticeVector> fiber_in_box(const IntegerMatrix& a, const LatticeVector& degree, Int box) {
  std::vector<LatticeVector> out;
  for_each_in_box(a.cols(), 0, box, [&](const LatticeVector& t) {
    if (a.apply(t) == degree) out.push_back(t);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// All t >= 0 with A t = degree, sorted, for A with nonnegative entries and
/// no zero column: coordinates are assigned left to right while the remaining
/// degree stays nonnegative.
inline std::vector<LatticeVector> fiber_of_nonnegative_config(const IntegerMatrix& a, const LatticeVector& degree) {
  std::vector<LatticeVector> out;
  LatticeVector t(a.cols());
  std::vector<Int> rest(degree.begin(), degree.end());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == a.cols()) {
      if (std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; })) out.push_back(t);
      return;
    }
    for (Int x = 0;; ++x) {
      bool fits = true;
      for (std::size_t i = 0; i < a.rows(); ++i) fits = fits && rest[i] >= 0;
      if (!fits) break;
      t[j] = x;
      rec(j + 1);
      for (std::size_t i = 0; i < a.rows(); ++i) rest[i] -= a(i, j);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) rest[i] += (t[j] + 1) * a(i, j);
    t[j] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Is p a convex combination of `others`? Carathéodory: try every subset of
/// at most dim + 1 points and solve for barycentric weights exactly.
inline bool in_convex_hull(const LatticeVector& p, const std::vector<LatticeVector>& others) {
  const std::size_t d = p.size();
  const std::size_t k_max = std::min(others.size(), d + 1);
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t k) -> bool {
    if (pick.size() == k) {
      // unknowns λ_1..λ_k; equations Σ λ_i t_i = p, Σ λ_i = 1
      std::vector<std::vector<Q>> m(d + 1, std::vector<Q>(k + 1));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < k; ++c) m[r][c] = others[pick[c]][r];
        m[r][k] = p[r];
      }
      for (std::size_t c = 0; c < k; ++c) m[d][c] = 1;
      m[d][k] = 1;
      std::size_t row = 0;
      std::vector<std::size_t> pivot_col;
      for (std::size_t c = 0; c < k && row <= d; ++c) {
        std::size_t piv = row;
        while (piv <= d && m[piv][c] == 0) ++piv;
        if (piv > d) return false;  // dependent subset: a smaller subset covers it
        std::swap(m[piv], m[row]);
        for (std::size_t i = 0; i <= d; ++i) {
          if (i == row || m[i][c] == 0) continue;
          const Q f = m[i][c] / m[row][c];
          for (std::size_t j = 0; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        ++row;
      }
      for (std::size_t i = row; i <= d; ++i)
        if (m[i][k] != 0) return false;
      for (std::size_t i = 0; i < row; ++i)
        if (m[i][k] / m[i][pivot_col[i]] < 0) return false;
      return true;
    }
    for (std::size_t i = start; i < others.size(); ++i) {
      pick.push_back(i);
      if (choose(i + 1, k)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= k_max; ++k) {
    pick.clear();
    if (choose(0, k)) return true;
  }
  return false;
}

/// Weighted spanning tree count by enumerating all (k-1)-edge subsets.
inline Int spanning_trees_by_enumeration(const std::vector<std::vector<Int>>& w) {
  const std::size_t k = w.size();
  if (k <= 1) return 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  Int total = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k - 1) {
      std::vector<std::size_t> parent(k);
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      Int weight = 1;
      for (std::size_t e : pick) {
        const auto [a, b] = edges[e];
        const std::size_t ra = find(a);
        const std::size_t rb = find(b);
        if (ra == rb) return;
        parent[ra] = rb;
        weight *= w[a][b];
      }
      total += weight;
      return;
    }
    for (std::size_t e = start; e < edges.size(); ++e) {
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return total;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Int lo, Int hi) {
  std::uniform_int_distribution<Int> entry(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

inline LatticeVector random_vector(std::mt19937_64& rng, std::size_t n, Int lo, Int hi) {
  std::uniform_int_distribution<Int> entry(lo, hi);
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = entry(rng);
  return v;
}

}  // namespace toric::testing
