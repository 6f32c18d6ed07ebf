#include "toric/fibers.hpp"
#include "toric/analysis.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_set>

namespace toric {

namespace {

void require_member(const IntegerMatrix& a, const LatticeVector& u) {
  if (u.size() != a.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(u.size()) + " against " + std::to_string(a.cols()) + " columns");
  }
  if (!a.apply(u).is_zero()) throw Error(ErrorKind::NotLatticeMember, "vector (" + to_string(u) + ") is not in ker(A)");
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// t + g stays nonnegative
bool step_stays_nonnegative(const LatticeVector& t, const LatticeVector& g) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (g[i] < 0 && t[i] < -g[i]) return false;
  return true;
}

}  // namespace

std::size_t FiberGraph::component_of(std::size_t member) const {
  for (std::size_t c = 0; c < components.size(); ++c)
    if (std::binary_search(components[c].begin(), components[c].end(), member)) return c;
  throw Error(ErrorKind::InvalidArgument, "member index out of range");
}

std::size_t FiberGraph::index_of(const LatticeVector& point) const {
  const auto it = std::lower_bound(members.begin(), members.end(), point);
  if (it == members.end() || *it != point) return members.size();
  return static_cast<std::size_t>(it - members.begin());
}

std::vector<LatticeVector> FiberGraph::component_points(std::size_t c) const {
  std::vector<LatticeVector> pts;
  for (std::size_t i : components.at(c)) pts.push_back(members[i]);
  return pts;
}

void require_positive(const GraverBasis& graver) {
  if (!is_positive(graver)) {
    throw Error(ErrorKind::NonPositiveLattice, "the lattice meets the nonnegative orthant outside 0; fibers are infinite");
  }
}

FiberGraph fiber(const GraverBasis& graver, const LatticeVector& u) {
  require_member(graver.configuration, u);
  require_positive(graver);

  const auto moves = graver.elements.symmetric();
  const LatticeVector start = u.positive_part();

  std::unordered_set<LatticeVector, LatticeVectorHash> seen{start};
  std::deque<LatticeVector> queue{start};
  while (!queue.empty()) {
    const LatticeVector t = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : moves) {
      if (!step_stays_nonnegative(t, g)) continue;
      auto next = t + g;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  FiberGraph f;
  f.degree = graver.configuration.apply(start);
  f.members.assign(seen.begin(), seen.end());
  std::sort(f.members.begin(), f.members.end());

  // members sharing a coordinate in their supports are joined
  const std::size_t n = u.size();
  DisjointSets sets(f.members.size());
  std::vector<std::size_t> anchor(n, f.members.size());
  for (std::size_t k = 0; k < f.members.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (f.members[k][i] == 0) continue;
      if (anchor[i] == f.members.size()) anchor[i] = k;
      else sets.unite(anchor[i], k);
    }

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t k = 0; k < f.members.size(); ++k) by_root[sets.find(k)].push_back(k);
  // roots are the smallest index in each set, so map order is component order
  for (auto& [root, comp] : by_root) f.components.push_back(std::move(comp));
  return f;
}

FiberGraph fiber(const IntegerMatrix& a, const LatticeVector& u) {
  require_member(a, u);
  return fiber(graver_basis(a), u);
}

bool in_universal_markov(const GraverBasis& graver, const LatticeVector& u) {
  if (u.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero vector is never a Markov move");
  const FiberGraph f = fiber(graver, u);
  return f.component_of(f.index_of(u.positive_part())) != f.component_of(f.index_of(u.negative_part()));
}

bool in_universal_markov(const IntegerMatrix& a, const LatticeVector& u) {
  require_member(a, u);
  return in_universal_markov(graver_basis(a), u);
}

std::vector<FiberGraph> markov_fibers(const GraverBasis& graver) {
  require_positive(graver);
  std::map<LatticeVector, LatticeVector> degrees;
  for (const auto& g : graver.elements) degrees.try_emplace(graver.configuration.apply(g.positive_part()), g);

  std::vector<FiberGraph> out;
  for (const auto& [degree, g] : degrees) {
    FiberGraph f = fiber(graver, g);
    if (f.components.size() >= 2) out.push_back(std::move(f));
  }
  return out;
}

VectorSet cross_component_moves(const std::vector<FiberGraph>& fibers) {
  std::vector<LatticeVector> moves;
  for (const auto& f : fibers)
    for (std::size_t ci = 0; ci < f.components.size(); ++ci)
      for (std::size_t cj = ci + 1; cj < f.components.size(); ++cj)
        for (std::size_t p : f.components[ci])
          for (std::size_t q : f.components[cj]) moves.push_back(f.members[p] - f.members[q]);
  return VectorSet(std::move(moves));
}

VectorSet minimal_markov_basis(const std::vector<FiberGraph>& fibers, TieBreak tie) {
  std::vector<LatticeVector> moves;
  for (const auto& f : fibers) {
    const auto representative = [&](std::size_t c) -> const LatticeVector& {
      return f.members[tie == TieBreak::Lexicographic ? f.components[c].front() : f.components[c].back()];
    };
    const std::size_t root = tie == TieBreak::Lexicographic ? 0 : f.component_of(f.members.size() - 1);
    for (std::size_t c = 0; c < f.components.size(); ++c)
      if (c != root) moves.push_back(representative(root) - representative(c));
  }
  return VectorSet(std::move(moves));
}

Int weighted_spanning_trees(const std::vector<std::vector<Int>>& weights) {
  using boost::multiprecision::cpp_int;
  const std::size_t k = weights.size();
  if (k <= 1) return 1;
  for (const auto& row : weights)
    if (row.size() != k) throw Error(ErrorKind::DimensionMismatch, "weight matrix is not square");

  // reduced Laplacian, then a fraction-free (Bareiss) determinant
  const std::size_t d = k - 1;
  std::vector<std::vector<cpp_int>> lap(d, std::vector<cpp_int>(d));
  for (std::size_t i = 0; i < d; ++i) {
    cpp_int degree = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) degree += weights[i][j];
    for (std::size_t j = 0; j < d; ++j) lap[i][j] = (i == j) ? degree : cpp_int(-weights[i][j]);
  }

  cpp_int previous = 1;
  int sign = 1;
  for (std::size_t p = 0; p < d; ++p) {
    if (lap[p][p] == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < d && lap[swap_row][p] == 0) ++swap_row;
      if (swap_row == d) return 0;
      std::swap(lap[p], lap[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < d; ++i) {
      for (std::size_t j = p + 1; j < d; ++j) lap[i][j] = (lap[i][j] * lap[p][p] - lap[i][p] * lap[p][j]) / previous;
      lap[i][p] = 0;
    }
    previous = lap[p][p];
  }
  const cpp_int det = sign * lap[d - 1][d - 1];
  if (det > std::numeric_limits<Int>::max() || det < 0)
    throw Error(ErrorKind::Overflow, "spanning tree count does not fit in 64 bits");
  return static_cast<Int>(det);
}

Int count_minimal_markov_bases(const std::vector<FiberGraph>& fibers) {
  Int total = 1;
  for (const auto& f : fibers) {
    const std::size_t k = f.components.size();
    std::vector<std::vector<Int>> w(k, std::vector<Int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j) w[i][j] = checked::mul(static_cast<Int>(f.components[i].size()), static_cast<Int>(f.components[j].size()));
    total = checked::mul(total, weighted_spanning_trees(w));
  }
  return total;
}

MarkovReport universal_markov_basis(const GraverBasis& graver) {
  MarkovReport report;
  report.markov_fibers = markov_fibers(graver);
  report.universal = cross_component_moves(report.markov_fibers);
  report.minimal = minimal_markov_basis(report.markov_fibers);
  for (const auto& f : report.markov_fibers)
    report.minimal_cardinality = checked::add(report.minimal_cardinality, static_cast<Int>(f.components.size()) - 1);
  report.minimal_basis_count = count_minimal_markov_bases(report.markov_fibers);
  return report;
}

MarkovReport universal_markov_basis(const IntegerMatrix& a) { return universal_markov_basis(graver_basis(a)); }

VectorSet minimal_markov_basis(const IntegerMatrix& a, TieBreak tie) {
  return minimal_markov_basis(markov_fibers(graver_basis(a)), tie);
}

Int count_minimal_markov_bases(const IntegerMatrix& a) { return count_minimal_markov_bases(markov_fibers(graver_basis(a))); }

}  // namespace toric
