#pragma once

#include <string>
#include <vector>

#include "nisg/norms.hpp"

namespace nisg {

struct NormFixture {
  std::string name;
  FiniteInverseSemigroup S;
  Valuation v;
  // What classification is expected to find.  Every fixture passes
  // pseudo-norm validation.
  bool weakly_permutable = false;
  bool separating = false;
};

// Built-in valuations: word lengths on small cyclic groups, strict and
// plateaued chain valuations, cardinality and trace valuations on power-set
// semilattices, sum and max valuations on grids, sum norms on
// group-times-semilattice products, rank defects on the partial injection
// monoids, and zero valuations.
const std::vector<NormFixture>& norm_fixtures();

// Structures for exhaustive table validation: partial injection monoids on
// two and three points, power sets up to four generators, cyclic groups up
// to order six, and products with commuting deltas up to 64 elements.
const std::vector<FiniteInverseSemigroup>& semigroup_fixtures();

}  // namespace nisg
