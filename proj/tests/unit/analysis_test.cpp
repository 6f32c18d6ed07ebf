#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "toric/analysis.hpp"
#include "toric/fibers.hpp"
#include "toric/lawrence.hpp"

#include <doctest.h>

#include <random>

using namespace toric;
using namespace toric::testing;

TEST_SUITE("analysis") {

TEST_CASE("is_positive examples") {
  CHECK(is_positive(IntegerMatrix::from_rows({{1, 1}})));
  CHECK_FALSE(is_positive(IntegerMatrix::from_rows({{1, -1}})));
  CHECK_FALSE(is_positive(IntegerMatrix::stack(nonpositive_pair_a(), nonpositive_pair_b())));
  CHECK(is_positive(eight_column_config()));
  CHECK(is_positive(IntegerMatrix::identity(3)));
}

TEST_CASE("is_positive agrees with a box search") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const IntegerMatrix a = random_matrix(rng, 1 + trial % 2, 2 + trial % 3, -2, 2);
    // a nonnegative kernel cone has an extreme ray with minimal support,
    // whose primitive vector has entries bounded by the 2x2 minors (<= 8)
    CAPTURE(trial);
    CHECK(is_positive(a) == !has_nonnegative_kernel_vector(a, 8));
  }
}

TEST_CASE("pure_sublattice examples") {
  CHECK(pure_sublattice(IntegerMatrix::from_rows({{1, 1}})).rank() == 0);
  const LatticeBasis p = pure_sublattice(IntegerMatrix::from_rows({{1, -1}}));
  REQUIRE(p.rank() == 1);
  CHECK(p.generators().front() == vec({1, 1}));

  for (std::size_t r : {2, 3}) {
    const IntegerMatrix a2 = IntegerMatrix::from_rows({{0, 0}, {1, -1}});
    const IntegerMatrix b2 = IntegerMatrix::from_rows({{1, -1}, {0, 0}});
    const IntegerMatrix lifted = lift(a2, b2, r).matrix;
    const LatticeBasis pure = pure_sublattice(lifted);
    CHECK(pure.rank() == r);
    CHECK(same_lattice(pure, integer_kernel(lifted)));
    for (const auto& g : pure.generators()) CHECK(g.is_nonnegative());
  }
}

TEST_CASE("pure_sublattice basis spans the nonnegative lattice elements") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegerMatrix a = random_matrix(rng, 1 + trial % 2, 2 + trial % 3, -2, 2);
    const GraverBasis g = graver_basis(a);
    const LatticeBasis pure = pure_sublattice(g);
    const LatticeBasis kernel = integer_kernel(a);
    CHECK((pure.rank() == 0) == is_positive(g));
    for (const auto& b : pure.generators()) CHECK(lattice_member(b, kernel));
    std::vector<LatticeVector> nonnegative;
    for (const auto& x : g.elements)
      if (x.is_nonnegative()) nonnegative.push_back(x);
    for (const auto& x : nonnegative) CHECK(lattice_member(x, pure));
    // each basis vector is generated by nonnegative lattice elements
    for (const auto& b : pure.generators()) CHECK(lattice_member(b, LatticeBasis::spanned_by(a.cols(), nonnegative)));
    // every small nonnegative kernel vector lies in the pure sublattice
    for_each_in_box(a.cols(), 0, 2, [&](const LatticeVector& v) {
      if (a.apply(v).is_zero()) CHECK(lattice_member(v, pure));
    });
  }
}

TEST_CASE("is_l_primitive examples") {
  const IntegerMatrix a = IntegerMatrix::from_rows({{1, -1}});
  CHECK(is_l_primitive(vec({1, 1}), a));
  CHECK_FALSE(is_l_primitive(vec({2, 2}), a));
  try {
    is_l_primitive(vec({1, -1}), a);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLatticeMember);
  }
  CHECK_THROWS_AS(is_l_primitive(vec({0, 0}), a), Error);
  // a non-saturated lattice: (2,2) spans it, so (2,2) is primitive there
  const LatticeBasis sparse(2, {vec({2, 2})});
  CHECK(is_l_primitive(vec({2, 2}), sparse));
  CHECK_FALSE(is_l_primitive(vec({4, 4}), sparse));
  CHECK_FALSE(is_l_primitive(vec({6, 6}), sparse));
}

TEST_CASE("classify_universal_markov examples") {
  const auto positive = classify_universal_markov(IntegerMatrix::from_rows({{1, 1}}));
  CHECK(positive.universal_markov_kind == UniversalMarkovKind::PositiveFinite);
  CHECK(positive.positive);

  const auto rank_one = classify_universal_markov(IntegerMatrix::from_rows({{1, -1}}));
  CHECK(rank_one.universal_markov_kind == UniversalMarkovKind::PureRankOne);
  REQUIRE(rank_one.generator.has_value());
  CHECK(*rank_one.generator == vec({1, 1}));

  const auto infinite = classify_universal_markov(IntegerMatrix::from_rows({{1, -1, 0}}));
  CHECK(infinite.universal_markov_kind == UniversalMarkovKind::Infinite);
  CHECK(infinite.pure_rank == 2);
  CHECK(infinite.lattice_is_pure);

  // rank-one pure sublattice inside a bigger lattice
  const auto impure = classify_universal_markov(IntegerMatrix::from_rows({{1, -1, 1, -1}, {0, 0, 1, 1}}));
  CHECK(impure.pure_rank == 1);
  CHECK_FALSE(impure.lattice_is_pure);
  CHECK(impure.universal_markov_kind == UniversalMarkovKind::Infinite);
}

TEST_CASE("classification branches are exclusive and exhaustive") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const IntegerMatrix a = random_matrix(rng, 1 + trial % 2, 2 + trial % 3, -2, 2);
    const auto c = classify_universal_markov(a);
    const bool positive_branch = c.positive;
    const bool rank_one_branch = c.pure_rank == 1 && c.lattice_is_pure;
    const bool infinite_branch = c.pure_rank > 1 || (c.pure_rank == 1 && !c.lattice_is_pure);
    CHECK(positive_branch + rank_one_branch + infinite_branch == 1);
    CHECK(c.positive == (c.pure_rank == 0));
    CHECK((c.universal_markov_kind == UniversalMarkovKind::PositiveFinite) == positive_branch);
    CHECK((c.universal_markov_kind == UniversalMarkovKind::PureRankOne) == rank_one_branch);
    CHECK((c.universal_markov_kind == UniversalMarkovKind::Infinite) == infinite_branch);
    CHECK(c.generator.has_value() == rank_one_branch);
    if (c.generator) CHECK(c.generator->is_nonnegative());
    if (positive_branch) CHECK(universal_markov_basis(a).universal.is_subset_of(graver_basis(a).elements));
  }
}

TEST_CASE("markov_subset_graver examples") {
  CHECK(markov_subset_graver(IntegerMatrix::from_rows({{1, 1}})));
  CHECK(markov_subset_graver(IntegerMatrix::from_rows({{1, -1}})));
  CHECK_FALSE(markov_subset_graver(IntegerMatrix::from_rows({{1, -1, 0}})));
}

TEST_CASE("markov_subset_ugb examples") {
  CHECK(markov_subset_ugb(IntegerMatrix::from_rows({{1, -1}})));
  CHECK_FALSE(markov_subset_ugb(eight_column_config()));
  CHECK(markov_subset_ugb(IntegerMatrix::from_rows({{1, 1}})));
  CHECK_FALSE(markov_subset_ugb(IntegerMatrix::from_rows({{1, -1, 0}})));
}

}  // TEST_SUITE
