#pragma once

// Fibers of positive lattices, their shared-support graphs, and the universal
// and minimal Markov bases read off from the component structure.

#include "toric/core.hpp"
#include "toric/graver.hpp"

#include <vector>

namespace toric {

/// Nonnegative integer points of one degree, with the connected components of
/// the graph joining two points whose supports intersect.
struct FiberGraph {
  LatticeVector degree;
  /// Sorted lexicographically.
  std::vector<LatticeVector> members;
  /// Indices into `members`; each component sorted, components ordered by
  /// their smallest member.
  std::vector<std::vector<std::size_t>> components;

  std::size_t component_of(std::size_t member) const;
  /// Index of `point` in members, or members.size() if absent.
  std::size_t index_of(const LatticeVector& point) const;
  std::vector<LatticeVector> component_points(std::size_t c) const;
};

struct MarkovReport {
  std::vector<FiberGraph> markov_fibers;
  VectorSet universal;
  VectorSet minimal;
  Int minimal_cardinality = 0;
  Int minimal_basis_count = 0;
};

/// Which member stands for a component (and which component is the root)
/// when a minimal basis is picked.
enum class TieBreak { Lexicographic, ReverseLexicographic };

/// Throws NonPositiveLattice unless graver's lattice is positive.
void require_positive(const GraverBasis& graver);

FiberGraph fiber(const GraverBasis& graver, const LatticeVector& u);
FiberGraph fiber(const IntegerMatrix& a, const LatticeVector& u);

bool in_universal_markov(const GraverBasis& graver, const LatticeVector& u);
bool in_universal_markov(const IntegerMatrix& a, const LatticeVector& u);

/// Fibers of Graver elements that have at least two components, ordered by degree.
std::vector<FiberGraph> markov_fibers(const GraverBasis& graver);

/// All cross-component differences of the given fibers.
VectorSet cross_component_moves(const std::vector<FiberGraph>& fibers);

/// Star spanning tree over each fiber's components.
VectorSet minimal_markov_basis(const std::vector<FiberGraph>& fibers, TieBreak tie = TieBreak::Lexicographic);

/// Number of spanning trees of the complete graph with edge (i, j) weighted
/// weights[i][j] (matrix-tree theorem, exact).
Int weighted_spanning_trees(const std::vector<std::vector<Int>>& weights);

/// Product over fibers of the component-size weighted spanning tree counts.
Int count_minimal_markov_bases(const std::vector<FiberGraph>& fibers);

MarkovReport universal_markov_basis(const GraverBasis& graver);
MarkovReport universal_markov_basis(const IntegerMatrix& a);

VectorSet minimal_markov_basis(const IntegerMatrix& a, TieBreak tie = TieBreak::Lexicographic);
Int count_minimal_markov_bases(const IntegerMatrix& a);

}  // namespace toric
