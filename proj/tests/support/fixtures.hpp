#pragma once

#include "toric/core.hpp"

#include <initializer_list>
#include <vector>

namespace toric::testing {

inline LatticeVector vec(std::initializer_list<Int> coords) { return LatticeVector(std::vector<Int>(coords)); }

inline VectorSet set_of(std::initializer_list<LatticeVector> vectors) { return VectorSet(std::vector<LatticeVector>(vectors)); }

/// 5×8 configuration whose Graver basis equals its universal Markov basis.
inline IntegerMatrix eight_column_config() {
  return IntegerMatrix::from_rows({
      {2, 2, 2, 2, 3, 3, 3, 3},
      {4, 0, 4, 0, 3, 3, 3, 3},
      {4, 0, 0, 4, 3, 3, 3, 3},
      {2, 2, 2, 2, 6, 0, 6, 0},
      {2, 2, 2, 2, 6, 0, 0, 6},
  });
}

// A minimal Markov basis {u, v, w} of the configuration above.
inline LatticeVector move_u() { return vec({1, 1, -1, -1, 0, 0, 0, 0}); }
inline LatticeVector move_v() { return vec({0, 0, 0, 0, 1, 1, -1, -1}); }
inline LatticeVector move_w() { return vec({2, 2, 1, 1, -1, -1, -1, -1}); }

/// [[1,1],[0,0]]: with B = I₂ its lifts are the K_{2,r} configurations.
inline IntegerMatrix two_row_a() { return IntegerMatrix::from_rows({{1, 1}, {0, 0}}); }

/// Pair whose intersection lattice is <(0,0,1,1)>, non-positive.
inline IntegerMatrix nonpositive_pair_a() { return IntegerMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, -1}}); }
inline IntegerMatrix nonpositive_pair_b() { return IntegerMatrix::from_rows({{1, 0, 1, -1}, {0, 1, 0, 0}}); }

}  // namespace toric::testing
