#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nisg/pairmap.hpp"
#include "nisg/rational.hpp"

namespace nisg {

// Random instance built on a grid lattice (product of short chains) with a
// coordinatewise-additive increasing weight: p(x,y) = v(join(x,y)).  Such a
// map is symmetric, submodular and diagonal-bounded by construction, which
// makes it an independent oracle for the checkers.
struct RandomGridInstance {
  PairMap map;
  std::vector<std::string> labels;   // coordinate tuples
  std::vector<Rational> weights;     // v per point
  bool strict = false;               // per-coordinate tables strictly increase
};

// Deterministic for a fixed seed.  strict=true forces separation
// (a partial metric); strict=false allows plateaus.
RandomGridInstance random_grid_ppm(std::uint64_t seed, bool strict);

// A submodular map that need not be symmetric or diagonal-bounded:
// random_grid_ppm optionally composed with a random one-sided shift.
PairMap random_submodular(std::uint64_t seed);

// Random points with nonnegative rational coordinates, for join-power maps.
std::vector<std::vector<Rational>> random_grid_points(std::uint64_t seed,
                                                      int max_points,
                                                      int max_dim);

}  // namespace nisg
