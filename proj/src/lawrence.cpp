#include "toric/lawrence.hpp"
#include "toric/analysis.hpp"
#include "toric/graver.hpp"

#include <algorithm>

namespace toric {

LiftedConfiguration lift(const IntegerMatrix& a, const IntegerMatrix& b, std::size_t r) {
  if (a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "A has " + std::to_string(a.cols()) + " columns but B has " +
                                                  std::to_string(b.cols()));
  }
  if (r < 2) throw Error(ErrorKind::InvalidArgument, "lifting order r must be at least 2");

  const std::size_t m = a.rows();
  const std::size_t p = b.rows();
  const std::size_t n = a.cols();
  IntegerMatrix lifted(r * m + p, r * n);
  for (std::size_t block = 0; block < r; ++block)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t col = block * n + i;
      for (std::size_t k = 0; k < m; ++k) lifted(block * m + k, col) = a(k, i);
      for (std::size_t k = 0; k < p; ++k) lifted(r * m + k, col) = b(k, i);
    }
  return {a, b, r, std::move(lifted)};
}

TableView::TableView(const LatticeVector& v, std::size_t r, std::size_t n) {
  if (v.size() != r * n) {
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) + " is not a " +
                                                  std::to_string(r) + "x" + std::to_string(n) + " table");
  }
  rows_.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto first = v.begin() + static_cast<std::ptrdiff_t>(i * n);
    rows_.emplace_back(std::vector<Int>(first, first + static_cast<std::ptrdiff_t>(n)));
  }
}

LatticeVector TableView::row_sum() const {
  LatticeVector sum(rows_.empty() ? 0 : rows_.front().size());
  for (const auto& row : rows_) sum += row;
  return sum;
}

std::size_t TableView::type() const {
  return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](const LatticeVector& row) { return !row.is_zero(); }));
}

std::size_t vector_type(const LatticeVector& v, std::size_t r, std::size_t n) { return TableView(v, r, n).type(); }

std::size_t complexity(const VectorSet& vectors, std::size_t r, std::size_t n) {
  std::size_t worst = 0;
  for (const auto& v : vectors) worst = std::max(worst, vector_type(v, r, n));
  return worst;
}

LatticeVector lambda_degree(const LiftedConfiguration& lifted, const LatticeVector& w) {
  return lifted.matrix.apply(w.positive_part());
}

IntersectionLattice intersection_lattice(const IntegerMatrix& a, const IntegerMatrix& b) {
  const IntegerMatrix stacked = IntegerMatrix::stack(a, b);
  return {integer_kernel(stacked), is_positive(stacked)};
}

std::size_t markov_complexity_at(const IntegerMatrix& a, const IntegerMatrix& b, std::size_t r, TieBreak tie) {
  const LiftedConfiguration lifted = lift(a, b, r);
  if (!intersection_lattice(a, b).positive) {
    throw Error(ErrorKind::NonPositiveLattice,
                "ker(A) ∩ ker(B) meets the nonnegative orthant, so minimal Markov bases of the lift differ in complexity");
  }
  return complexity(minimal_markov_basis(lifted.matrix, tie), r, lifted.n());
}

Int graver_complexity(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "A and B have different column counts");
  const GraverBasis graver = graver_basis(a);
  if (graver.elements.empty()) return 0;
  const IntegerMatrix gr = IntegerMatrix::from_columns(a.cols(), graver.elements.symmetric());
  const GraverBasis outer = graver_basis(b * gr);
  Int worst = 0;
  for (const auto& g : outer.elements) worst = std::max(worst, g.norm1());
  return worst;
}

}  // namespace toric
