#include "toric/analysis.hpp"
#include "toric/fibers.hpp"
#include "toric/geometry.hpp"

#include <algorithm>

namespace toric {

// A nonnegative lattice vector is a conformal sum of nonnegative Graver
// elements, so scanning the Graver basis decides positivity and spans L_pure.

bool is_positive(const GraverBasis& graver) {
  return std::none_of(graver.elements.begin(), graver.elements.end(),
                      [](const LatticeVector& g) { return g.is_nonnegative(); });
}

bool is_positive(const IntegerMatrix& a) { return is_positive(graver_basis(a)); }

LatticeBasis pure_sublattice(const GraverBasis& graver) {
  std::vector<LatticeVector> nonnegative;
  for (const auto& g : graver.elements)
    if (g.is_nonnegative()) nonnegative.push_back(g);
  return LatticeBasis::spanned_by(graver.configuration.cols(), nonnegative);
}

LatticeBasis pure_sublattice(const IntegerMatrix& a) { return pure_sublattice(graver_basis(a)); }

bool is_l_primitive(const LatticeVector& v, const LatticeBasis& lattice) {
  if (!lattice_member(v, lattice)) throw Error(ErrorKind::NotLatticeMember, "vector (" + to_string(v) + ") is not in the lattice");
  if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero vector is not primitive");
  const Int content = v.content();
  for (Int d = 2; d <= content; ++d)
    if (content % d == 0 && lattice_member(v.divided(d), lattice)) return false;
  return true;
}

bool is_l_primitive(const LatticeVector& v, const IntegerMatrix& a) {
  if (v.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from the number of columns");
  return is_l_primitive(v, integer_kernel(a));
}

LatticeClassification classify_universal_markov(const GraverBasis& graver) {
  LatticeClassification c;
  c.pure_basis = pure_sublattice(graver);
  c.pure_rank = c.pure_basis.rank();
  c.positive = c.pure_rank == 0;
  c.lattice_is_pure = same_lattice(integer_kernel(graver.configuration), c.pure_basis);

  if (c.positive) {
    c.universal_markov_kind = UniversalMarkovKind::PositiveFinite;
  } else if (c.pure_rank == 1 && c.lattice_is_pure) {
    c.universal_markov_kind = UniversalMarkovKind::PureRankOne;
    // spanned by nonnegative vectors, so the generator or its negation is nonnegative
    const auto& g = c.pure_basis.generators().front();
    c.generator = g.is_nonnegative() ? g : -g;
  } else {
    c.universal_markov_kind = UniversalMarkovKind::Infinite;
  }
  return c;
}

LatticeClassification classify_universal_markov(const IntegerMatrix& a) {
  return classify_universal_markov(graver_basis(a));
}

bool markov_subset_graver(const IntegerMatrix& a) {
  return classify_universal_markov(a).universal_markov_kind != UniversalMarkovKind::Infinite;
}

bool markov_subset_ugb(const IntegerMatrix& a) {
  const GraverBasis graver = graver_basis(a);
  switch (classify_universal_markov(graver).universal_markov_kind) {
    case UniversalMarkovKind::PureRankOne: return true;
    case UniversalMarkovKind::Infinite: return false;
    case UniversalMarkovKind::PositiveFinite: break;
  }
  for (const auto& f : markov_fibers(graver)) {
    const auto vertices = markov_polytope_vertices(f);
    for (std::size_t c = 0; c < f.components.size(); ++c)
      if (vertices[c].size() != f.components[c].size()) return false;
  }
  return true;
}

}  // namespace toric
