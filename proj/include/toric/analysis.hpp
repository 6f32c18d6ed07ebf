#pragma once

// Positivity, the pure sublattice, L-primitivity, and where the universal
// Markov basis of a configuration lives.

#include "toric/core.hpp"
#include "toric/graver.hpp"

#include <optional>

namespace toric {

enum class UniversalMarkovKind {
  PositiveFinite,  ///< L ∩ N^n = {0}; the universal Markov basis is finite and inside the Graver basis
  PureRankOne,     ///< L = L_pure = <w> with w >= 0
  Infinite,        ///< rank L_pure > 1, or rank 1 with L != L_pure
};

struct LatticeClassification {
  bool positive = false;
  std::size_t pure_rank = 0;
  LatticeBasis pure_basis;
  bool lattice_is_pure = false;
  UniversalMarkovKind universal_markov_kind = UniversalMarkovKind::PositiveFinite;
  /// Nonnegative generator of L, set only for PureRankOne.
  std::optional<LatticeVector> generator;
};

bool is_positive(const GraverBasis& graver);
bool is_positive(const IntegerMatrix& a);

/// Sublattice generated by L(A) ∩ N^n, in Hermite normal form.
LatticeBasis pure_sublattice(const GraverBasis& graver);
LatticeBasis pure_sublattice(const IntegerMatrix& a);

/// Q v ∩ L = Z v. Throws NotLatticeMember if v is not in the lattice.
bool is_l_primitive(const LatticeVector& v, const LatticeBasis& lattice);
bool is_l_primitive(const LatticeVector& v, const IntegerMatrix& a);

LatticeClassification classify_universal_markov(const GraverBasis& graver);
LatticeClassification classify_universal_markov(const IntegerMatrix& a);

/// Universal Markov basis ⊆ Graver basis.
bool markov_subset_graver(const IntegerMatrix& a);

/// Universal Markov basis ⊆ universal Gröbner basis.
bool markov_subset_ugb(const IntegerMatrix& a);

}  // namespace toric
