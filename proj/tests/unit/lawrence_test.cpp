#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "toric/analysis.hpp"
#include "toric/lawrence.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <set>

using namespace toric;
using namespace toric::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;  // sentinel: nothing thrown
}

// The C(r,2) moves of the 4-cycles of K_{2,r}: row i = (1,-1), row j = (-1,1).
VectorSet four_cycles(std::size_t r) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      LatticeVector v(2 * r);
      v[2 * i] = 1;
      v[2 * i + 1] = -1;
      v[2 * j] = -1;
      v[2 * j + 1] = 1;
      out.push_back(v);
    }
  return VectorSet(std::move(out));
}

}  // namespace

TEST_SUITE("lawrence") {

TEST_CASE("lift examples") {
  const LiftedConfiguration l = lift(IntegerMatrix::from_rows({{1, 1}}), IntegerMatrix::identity(2), 2);
  CHECK(l.matrix == IntegerMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(l.n() == 2);

  std::mt19937_64 rng(71);
  const IntegerMatrix a = random_matrix(rng, 2, 4, -3, 3);
  const IntegerMatrix b = random_matrix(rng, 2, 4, -3, 3);
  const IntegerMatrix m = lift(a, b, 3).matrix;
  CHECK(m.rows() == 8);
  CHECK(m.cols() == 12);
  // column block*n + i holds a_i in block `block` over b_i
  for (std::size_t block = 0; block < 3; ++block)
    for (std::size_t i = 0; i < 4; ++i) {
      const LatticeVector col = m.column(block * 4 + i);
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t row = 0; row < 2; ++row) CHECK(col[k * 2 + row] == (k == block ? a(row, i) : 0));
      for (std::size_t row = 0; row < 2; ++row) CHECK(col[6 + row] == b(row, i));
    }

  CHECK(kind_of([] { lift(IntegerMatrix::identity(2), IntegerMatrix::identity(3), 2); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { lift(IntegerMatrix::identity(2), IntegerMatrix::identity(2), 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("identity B gives the classical Lawrence lifting") {
  const IntegerMatrix a = IntegerMatrix::from_rows({{1, 2, 3}});
  for (std::size_t r : {2, 3}) {
    const IntegerMatrix m = lift(a, IntegerMatrix::identity(3), r).matrix;
    IntegerMatrix classical(r * a.rows() + 3, r * 3);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < 3; ++j) {
        classical(k, k * 3 + j) = a(0, j);
        classical(r + j, k * 3 + j) = 1;
      }
    CHECK(m == classical);
  }
}

TEST_CASE("vector_type examples") {
  CHECK(vector_type(vec({1, -1, 0, 0}), 2, 2) == 1);
  CHECK(vector_type(vec({0, 0, 0, 0, 0, 0}), 3, 2) == 0);
  const LatticeVector w = vec({0, 0, 1, 1});
  for (std::size_t r : {2, 3, 4}) {
    std::vector<Int> stacked;
    for (std::size_t i = 0; i < r; ++i) stacked.insert(stacked.end(), w.begin(), w.end());
    CHECK(vector_type(LatticeVector(stacked), r, 4) == r);
  }
  CHECK(kind_of([] { vector_type(vec({1, 2, 3}), 2, 2); }) == ErrorKind::DimensionMismatch);
  CHECK(complexity(VectorSet{}, 2, 2) == 0);
}

TEST_CASE("TableView rows and row sum") {
  const TableView t(vec({1, 2, 3, 4, 5, 6}), 3, 2);
  CHECK(t.row_count() == 3);
  CHECK(t.row(1) == vec({3, 4}));
  CHECK(t.row_sum() == vec({9, 12}));
  CHECK(t.type() == 3);
}

TEST_CASE("intersection_lattice examples") {
  const IntersectionLattice x = intersection_lattice(nonpositive_pair_a(), nonpositive_pair_b());
  REQUIRE(x.basis.rank() == 1);
  CHECK(x.basis.generators().front().canonical() == vec({0, 0, 1, 1}));
  CHECK_FALSE(x.positive);

  const IntersectionLattice y = intersection_lattice(IntegerMatrix::from_rows({{1, 1}}), IntegerMatrix::identity(2));
  CHECK(y.basis.rank() == 0);
  CHECK(y.positive);

  const IntersectionLattice z = intersection_lattice(IntegerMatrix::from_rows({{1, 1}}), IntegerMatrix::from_rows({{1, 1}}));
  REQUIRE(z.basis.rank() == 1);
  CHECK(z.basis.generators().front().canonical() == vec({1, -1}));
  CHECK(z.positive);

  CHECK(kind_of([] { intersection_lattice(IntegerMatrix::identity(2), IntegerMatrix::identity(3)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("markov_complexity_at examples") {
  const IntegerMatrix one_one = IntegerMatrix::from_rows({{1, 1}});
  CHECK(markov_complexity_at(one_one, IntegerMatrix::identity(2), 3) == 2);
  CHECK(markov_complexity_at(one_one, one_one, 3) == 1);
  for (std::size_t r : {2, 3})
    CHECK(kind_of([r] { markov_complexity_at(nonpositive_pair_a(), nonpositive_pair_b(), r); }) ==
          ErrorKind::NonPositiveLattice);
}

TEST_CASE("K_{2,r} minimal bases are the 4-cycles") {
  for (std::size_t r : {2, 3, 4}) {
    const IntegerMatrix m = lift(two_row_a(), IntegerMatrix::identity(2), r).matrix;
    const VectorSet minimal = minimal_markov_basis(m);
    CHECK(minimal == four_cycles(r));
    CHECK(minimal.size() == r * (r - 1) / 2);
    CHECK(count_minimal_markov_bases(m) == 1);
  }
}

TEST_CASE("graver_complexity examples") {
  const IntegerMatrix one_one = IntegerMatrix::from_rows({{1, 1}});
  CHECK(graver_complexity(one_one, IntegerMatrix::identity(2)) == 2);
  CHECK(graver_complexity(one_one, one_one) == 1);
  CHECK(graver_complexity(IntegerMatrix::identity(2), IntegerMatrix::from_rows({{3, -1}})) == 0);
  CHECK(kind_of([] { graver_complexity(IntegerMatrix::identity(2), IntegerMatrix::identity(3)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("Graver complexity bounds the types of lifted Graver elements") {
  const IntegerMatrix one_one = IntegerMatrix::from_rows({{1, 1}});
  for (const auto& b : {IntegerMatrix::identity(2), one_one}) {
    const Int g = graver_complexity(one_one, b);
    for (std::size_t r : {2, 3}) {
      const IntegerMatrix m = lift(one_one, b, r).matrix;
      const VectorSet brute = graver_bruteforce(m, 2);
      CHECK(brute == graver_basis(m).elements);
      CHECK(static_cast<Int>(complexity(brute, r, 2)) == g);
    }
  }
}

TEST_CASE("positivity of the stack matches positivity of every lift") {
  std::mt19937_64 rng(72);
  int nonpositive = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const IntegerMatrix a = random_matrix(rng, 1, n, -2, 2);
    const IntegerMatrix b = random_matrix(rng, 1, n, -2, 2);
    const bool stack_positive = is_positive(IntegerMatrix::stack(a, b));
    if (!stack_positive) ++nonpositive;
    for (std::size_t r : {2, 3}) CHECK(is_positive(lift(a, b, r).matrix) == stack_positive);
  }
  CHECK(nonpositive > 0);
}

TEST_CASE("lifts of non-positive pairs contain stacked elements of full type") {
  std::mt19937_64 rng(73);
  std::vector<std::pair<IntegerMatrix, IntegerMatrix>> pairs{{nonpositive_pair_a(), nonpositive_pair_b()}};
  while (pairs.size() < 10) {
    const IntegerMatrix a = random_matrix(rng, 1, 3, -2, 2);
    const IntegerMatrix b = random_matrix(rng, 1, 3, -2, 2);
    if (!intersection_lattice(a, b).positive) pairs.emplace_back(a, b);
  }
  for (const auto& [a, b] : pairs) {
    const IntersectionLattice x = intersection_lattice(a, b);
    REQUIRE(x.basis.rank() > 0);
    for (std::size_t r : {2, 3}) {
      const IntegerMatrix m = lift(a, b, r).matrix;
      for (const auto& w : x.basis.generators()) {
        std::vector<Int> stacked;
        for (std::size_t i = 0; i < r; ++i) stacked.insert(stacked.end(), w.begin(), w.end());
        const LatticeVector c(stacked);
        CHECK(m.apply(c).is_zero());
        CHECK(vector_type(c, r, a.cols()) == r);
      }
    }
  }
}

TEST_CASE("non-positive example: lifts have a pure sublattice of rank r") {
  for (std::size_t r : {2, 3}) {
    const IntegerMatrix m = lift(nonpositive_pair_a(), nonpositive_pair_b(), r).matrix;
    CHECK_FALSE(is_positive(m));
    const auto c = classify_universal_markov(m);
    CHECK(c.pure_rank == r);
    CHECK(c.universal_markov_kind == UniversalMarkovKind::Infinite);
  }
}

TEST_CASE("table rows lie in ker A and row sums in ker B") {
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const IntegerMatrix a = random_matrix(rng, 1, n, -2, 2);
    const IntegerMatrix b = random_matrix(rng, 1, n, -2, 2);
    for (std::size_t r : {2, 3}) {
      const IntegerMatrix m = lift(a, b, r).matrix;
      std::vector<LatticeVector> elements = integer_kernel(m).generators();
      for (const auto& g : graver_basis(m).elements) elements.push_back(g);
      for (const auto& v : elements) {
        const TableView t(v, r, n);
        for (const auto& row : t.rows()) CHECK(a.apply(row).is_zero());
        CHECK(b.apply(t.row_sum()).is_zero());
      }
    }
  }
}

TEST_CASE("complexity chain: minimal <= Graver of the lift <= g(A,B)") {
  std::mt19937_64 rng(75);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 12; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const IntegerMatrix a = random_matrix(rng, 1, n, -2, 2);
    const IntegerMatrix b = random_matrix(rng, 1, n, -2, 2);
    if (!intersection_lattice(a, b).positive) continue;
    const Int g = graver_complexity(a, b);
    for (std::size_t r : {2, 3}) {
      const IntegerMatrix m = lift(a, b, r).matrix;
      const std::size_t markov = markov_complexity_at(a, b, r);
      const std::size_t graver = complexity(graver_basis(m).elements, r, n);
      CHECK(markov <= graver);
      CHECK(static_cast<Int>(graver) <= g);
      // the lifted degree of a minimal element is its positive part's image
      const LiftedConfiguration l = lift(a, b, r);
      for (const auto& x : minimal_markov_basis(m)) CHECK(lambda_degree(l, x) == m.apply(x.negative_part()));
    }
    ++tested;
  }
  CHECK(tested >= 5);
}

}  // TEST_SUITE
