// Hermite normal form by Euclidean row reduction, and the lattice operations
// built on it. Everything is unimodular row arithmetic on checked int64.

#include "toric/core.hpp"

#include <algorithm>
#include <utility>

namespace toric {

namespace {

using Row = std::vector<Int>;

// row[target] -= q * row[source], full length
void subtract_multiple(Row& target, const Row& source, Int q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < target.size(); ++k) target[k] = checked::sub(target[k], checked::mul(q, source[k]));
}

// Brings `rows` into echelon form with respect to the first `pivot_cols`
// columns using unimodular row operations. Returns the number of pivot rows;
// these come first, rows after them are zero on the pivot columns.
std::size_t echelonize(std::vector<Row>& rows, std::size_t pivot_cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < pivot_cols && rank < rows.size(); ++c) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = rank; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || checked::abs(rows[i][c]) < checked::abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      has_pivot = true;
      std::swap(rows[rank], rows[best]);
      bool cleared = true;
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        subtract_multiple(rows[i], rows[rank], checked::floor_div(rows[i][c], rows[rank][c]));
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (rows[rank][c] < 0)
      for (auto& x : rows[rank]) x = checked::neg(x);
    for (std::size_t i = 0; i < rank; ++i) subtract_multiple(rows[i], rows[rank], checked::floor_div(rows[i][c], rows[rank][c]));
    ++rank;
  }
  return rank;
}

std::vector<Row> echelon_rows(const std::vector<LatticeVector>& vectors, std::size_t n) {
  std::vector<Row> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
    rows.emplace_back(v.begin(), v.end());
  }
  rows.resize(echelonize(rows, n));
  return rows;
}

}  // namespace

LatticeBasis::LatticeBasis(std::size_t ambient_dimension, std::vector<LatticeVector> generators)
    : ambient_(ambient_dimension), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
}

LatticeBasis LatticeBasis::spanned_by(std::size_t ambient_dimension, const std::vector<LatticeVector>& vectors) {
  std::vector<LatticeVector> gens;
  for (auto& r : echelon_rows(vectors, ambient_dimension)) gens.emplace_back(std::move(r));
  return LatticeBasis(ambient_dimension, std::move(gens));
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  const std::size_t rank = echelonize(rows, m.cols());
  std::vector<Int> entries;
  for (std::size_t i = 0; i < rank; ++i) entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  return IntegerMatrix(rank, m.cols(), std::move(entries));
}

LatticeBasis integer_kernel(const IntegerMatrix& a) {
  if (a.cols() == 0) throw Error(ErrorKind::InvalidArgument, "kernel of a matrix with no columns");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // [A^T | I_n]; rows whose A^T part vanishes carry kernel vectors
  std::vector<Row> rows(n, Row(m + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) rows[j][i] = a(i, j);
    rows[j][m + j] = 1;
  }
  const std::size_t rank = echelonize(rows, m);
  std::vector<LatticeVector> kernel;
  for (std::size_t j = rank; j < n; ++j) kernel.emplace_back(Row(rows[j].begin() + static_cast<std::ptrdiff_t>(m), rows[j].end()));
  return LatticeBasis::spanned_by(n, kernel);
}

bool lattice_member(const LatticeVector& v, const LatticeBasis& basis) {
  if (v.size() != basis.ambient_dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " against lattice in dimension " +
                                                  std::to_string(basis.ambient_dimension()));
  }
  Row rest(v.begin(), v.end());
  for (const auto& h : echelon_rows(basis.generators(), basis.ambient_dimension())) {
    const auto pivot = static_cast<std::size_t>(std::find_if(h.begin(), h.end(), [](Int x) { return x != 0; }) - h.begin());
    if (rest[pivot] % h[pivot] != 0) return false;
    subtract_multiple(rest, h, rest[pivot] / h[pivot]);
  }
  return std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; });
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_dimension() != b.ambient_dimension() || a.rank() != b.rank()) return false;
  const auto inside = [](const LatticeBasis& x, const LatticeBasis& y) {
    return std::all_of(x.generators().begin(), x.generators().end(), [&](const LatticeVector& g) { return lattice_member(g, y); });
  };
  return inside(a, b) && inside(b, a);
}

}  // namespace toric
