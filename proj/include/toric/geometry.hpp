#pragma once

// Exact polyhedral tests on finite point sets, and membership in the
// universal Gröbner basis of a positive lattice.

#include "toric/core.hpp"
#include "toric/fibers.hpp"
#include "toric/graver.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace toric {

using Rational = boost::multiprecision::cpp_rational;

struct LinearEquality {
  std::vector<Rational> normal;
  Rational offset;
};

/// { x : normal·x = offset for every equality, normal·x >= 1 for every inequality }
struct RationalConstraintSystem {
  std::size_t dimension = 0;
  std::vector<LinearEquality> equalities;
  std::vector<std::vector<Rational>> inequalities;
};

struct Feasibility {
  bool feasible = false;
  /// A point of the system when feasible.
  std::vector<Rational> witness;
};

/// Decided by Gaussian elimination of the equalities followed by
/// Fourier–Motzkin elimination, all in exact rationals.
Feasibility linear_feasible(const RationalConstraintSystem& system);

/// Does `witness` satisfy every constraint exactly?
bool satisfies(const RationalConstraintSystem& system, std::span<const Rational> witness);

/// p is a vertex of conv(points). p must be one of the points.
bool is_vertex(const LatticeVector& p, std::span<const LatticeVector> points);

/// [p, q] is an edge of conv(points). p and q must be distinct points of the set.
bool is_edge(const LatticeVector& p, const LatticeVector& q, std::span<const LatticeVector> points);

enum class UgbCriterion { Member, GcdNotOne, NotAnEdge };

/// Universal Gröbner membership with the criterion that decided it.
UgbCriterion universal_gb_verdict(const GraverBasis& graver, const LatticeVector& u);

bool in_universal_gb(const GraverBasis& graver, const LatticeVector& u);
bool in_universal_gb(const IntegerMatrix& a, const LatticeVector& u);

VectorSet universal_gb(const GraverBasis& graver);
VectorSet universal_gb(const IntegerMatrix& a);

/// Vertices of the convex hull of each component, in component order.
std::vector<std::vector<LatticeVector>> markov_polytope_vertices(const FiberGraph& fiber);
std::vector<std::vector<LatticeVector>> markov_polytope_vertices(const IntegerMatrix& a, const FiberGraph& fiber);

}  // namespace toric
