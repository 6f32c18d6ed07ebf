#pragma once

// Generalized Lawrence liftings Λ(A, B, r): r diagonal copies of A over a band
// of r copies of B. A vector of length r·n is read as an r×n table whose i-th
// row holds entries i·n .. i·n + n - 1.

#include "toric/core.hpp"
#include "toric/fibers.hpp"

#include <vector>

namespace toric {

struct LiftedConfiguration {
  IntegerMatrix a;
  IntegerMatrix b;
  std::size_t r = 0;
  /// (r·m + p) × (r·n)
  IntegerMatrix matrix;

  std::size_t n() const noexcept { return a.cols(); }
};

LiftedConfiguration lift(const IntegerMatrix& a, const IntegerMatrix& b, std::size_t r);

/// A length r·n vector viewed as r rows of length n.
class TableView {
 public:
  TableView(const LatticeVector& v, std::size_t r, std::size_t n);

  std::size_t row_count() const noexcept { return rows_.size(); }
  const LatticeVector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<LatticeVector>& rows() const noexcept { return rows_; }
  LatticeVector row_sum() const;
  /// Number of nonzero rows.
  std::size_t type() const;

 private:
  std::vector<LatticeVector> rows_;
};

std::size_t vector_type(const LatticeVector& v, std::size_t r, std::size_t n);

/// Largest type in the set, 0 for the empty set.
std::size_t complexity(const VectorSet& vectors, std::size_t r, std::size_t n);

/// Λ(A, B, r)·W+, the degree of W in the lifted configuration.
LatticeVector lambda_degree(const LiftedConfiguration& lifted, const LatticeVector& w);

struct IntersectionLattice {
  LatticeBasis basis;
  bool positive = false;
};

/// ker_Z(A) ∩ ker_Z(B); positive exactly when every lift Λ(A, B, r) is.
IntersectionLattice intersection_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

/// Complexity of a minimal Markov basis of Λ(A, B, r). Throws
/// NonPositiveLattice when the lift is not positive, where the value depends
/// on the basis chosen.
std::size_t markov_complexity_at(const IntegerMatrix& a, const IntegerMatrix& b, std::size_t r,
                                 TieBreak tie = TieBreak::Lexicographic);

/// g(A, B): largest 1-norm in the Graver basis of B·Gr(A), where Gr(A) has
/// both signs of every Graver element of A as columns.
Int graver_complexity(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace toric
