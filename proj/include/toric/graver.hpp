#pragma once

#include "toric/core.hpp"

#include <span>

namespace toric {

/// Conformally minimal nonzero elements of ker_Z(A), one representative per
/// sign pair.
struct GraverBasis {
  IntegerMatrix configuration;
  VectorSet elements;
};

/// Repeatedly subtracts any reducer g (or -g) with g conforming to the current
/// value; returns the irreducible residue.
LatticeVector conformal_normal_form(LatticeVector v, std::span<const LatticeVector> reducers);

/// Completion of a lattice basis to the set of conformally minimal elements of
/// the lattice it generates. The working set is inter-reduced after every
/// `interreduce_every` insertions; the result does not depend on it.
VectorSet graver_completion(const LatticeBasis& lattice, std::size_t interreduce_every = 1000);

GraverBasis graver_basis(const IntegerMatrix& a);

/// Exhaustive oracle: conformally minimal kernel vectors inside [-box, box]^n.
/// Matches graver_basis only when the true basis fits in the box.
VectorSet graver_bruteforce(const IntegerMatrix& a, Int box);

}  // namespace toric
