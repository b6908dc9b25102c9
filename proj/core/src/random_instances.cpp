#include "nisg/random_instances.hpp"

#include <random>

#include "nisg/errors.hpp"

namespace nisg {

namespace {

// Draws in [0, bound] via modulo; bias is irrelevant here, determinism is.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % (bound + 1);
}

}  // namespace

RandomGridInstance random_grid_ppm(std::uint64_t seed, bool strict) {
  std::mt19937_64 rng(seed);
  const int dims = 1 + static_cast<int>(draw(rng, 2));
  std::vector<int> sizes;
  int total = 1;
  for (int d = 0; d < dims; ++d) {
    int s = 2 + static_cast<int>(draw(rng, 2));
    while (s > 2 && total * s > 24) --s;
    if (total * s > 24) break;
    sizes.push_back(s);
    total *= s;
  }
  if (sizes.empty()) sizes.push_back(2), total = 2;

  // Increasing integer tables per coordinate, shared denominator.
  const long den = 1 + static_cast<long>(draw(rng, 5));
  std::vector<std::vector<long>> tables;
  for (int s : sizes) {
    std::vector<long> g;
    long acc = static_cast<long>(draw(rng, 3));
    g.push_back(acc);
    for (int i = 1; i < s; ++i) {
      acc += strict ? 1 + static_cast<long>(draw(rng, 4))
                    : static_cast<long>(draw(rng, 3));
      g.push_back(acc);
    }
    tables.push_back(std::move(g));
  }

  const int d = static_cast<int>(sizes.size());
  std::vector<std::vector<int>> coords;
  coords.reserve(static_cast<std::size_t>(total));
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < total; ++i) {
    coords.push_back(cur);
    for (int k = d - 1; k >= 0; --k) {
      if (++cur[static_cast<std::size_t>(k)] <
          sizes[static_cast<std::size_t>(k)]) {
        break;
      }
      cur[static_cast<std::size_t>(k)] = 0;
    }
  }

  RandomGridInstance out;
  out.strict = strict;
  const auto weight = [&](const std::vector<int>& c) {
    long sum = 0;
    for (int k = 0; k < d; ++k) {
      sum += tables[static_cast<std::size_t>(k)]
                   [static_cast<std::size_t>(c[static_cast<std::size_t>(k)])];
    }
    return rat_frac(sum, den);
  };
  for (const auto& c : coords) {
    out.weights.push_back(weight(c));
    std::string l = "(";
    for (int k = 0; k < d; ++k) {
      if (k > 0) l += ",";
      l += std::to_string(c[static_cast<std::size_t>(k)]);
    }
    l += ")";
    out.labels.push_back(std::move(l));
  }
  out.map = PairMap(total);
  std::vector<int> join(static_cast<std::size_t>(d), 0);
  for (int x = 0; x < total; ++x) {
    for (int y = 0; y < total; ++y) {
      for (int k = 0; k < d; ++k) {
        join[static_cast<std::size_t>(k)] =
            std::max(coords[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)],
                     coords[static_cast<std::size_t>(y)][static_cast<std::size_t>(k)]);
      }
      out.map.at(x, y) = weight(join);
    }
  }
  return out;
}

PairMap random_submodular(std::uint64_t seed) {
  RandomGridInstance base = random_grid_ppm(seed, (seed & 1) == 0);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const int mode = static_cast<int>(draw(rng, 2));
  if (mode == 0) return base.map;
  std::vector<Rational> f;
  f.reserve(static_cast<std::size_t>(base.map.size()));
  for (int i = 0; i < base.map.size(); ++i) {
    f.push_back(rat_frac(static_cast<long>(draw(rng, 6)) - 3,
                         1 + static_cast<long>(draw(rng, 2))));
  }
  return transform_shift(base.map, f,
                         mode == 1 ? ShiftSide::Left : ShiftSide::Right);
}

std::vector<std::vector<Rational>> random_grid_points(std::uint64_t seed,
                                                      int max_points,
                                                      int max_dim) {
  if (max_points < 1 || max_dim < 1) {
    throw input_error("random_grid_points: bad bounds");
  }
  std::mt19937_64 rng(seed ^ 0xda942042e4dd58b5ull);
  const int dim = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_dim - 1)));
  const int count =
      2 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_points - 2)));
  std::vector<std::vector<Rational>> points;
  points.reserve(static_cast<std::size_t>(count));
  const long den = 1 + static_cast<long>(draw(rng, 3));
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> pt;
    pt.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
      pt.push_back(rat_frac(static_cast<long>(draw(rng, 9)), den));
    }
    points.push_back(std::move(pt));
  }
  return points;
}

}  // namespace nisg
