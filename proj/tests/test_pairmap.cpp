#include <optional>
#include <vector>

#include "doctest.h"
#include "nisg/errors.hpp"
#include "nisg/pairmap.hpp"
#include "nisg/random_instances.hpp"
#include "nisg/rational.hpp"

using namespace nisg;

namespace {

PairMap from_rows(std::vector<std::vector<Rational>> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Rational> flat;
  for (auto& r : rows) {
    REQUIRE(static_cast<int>(r.size()) == n);
    for (auto& v : r) flat.push_back(std::move(v));
  }
  return PairMap(n, std::move(flat));
}

}  // namespace

TEST_CASE("submodularity accepts join valuations and rejects identity cost") {
  const PairMap chain = from_rows({{0, 1}, {1, 1}});
  CHECK(is_submodular_quiet(chain));
  CHECK(is_submodular(chain).pass);

  // p = 1 on the diagonal, 0 off it: p(0,0)+p(1,1) > p(0,1)+p(1,0).
  const PairMap anti = from_rows({{1, 0}, {0, 1}});
  CHECK_FALSE(is_submodular_quiet(anti));
  const Report r = is_submodular(anti);
  CHECK_FALSE(r.pass);
  const Assertion* a = r.find("submodularity");
  REQUIRE(a != nullptr);
  REQUIRE(a->witness.has_value());
  REQUIRE(a->witness->elements.size() == 3);
  CHECK(a->witness->elements[0].index == 0);
  CHECK(a->witness->elements[1].index == 0);
  CHECK(a->witness->elements[2].index == 1);
}

TEST_CASE("symmetry criterion agrees with symmetry on submodular maps") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const PairMap p = random_grid_ppm(seed, seed % 2 == 0).map;
    CHECK(is_symmetric(p));
    CHECK(symmetry_criterion(p));
    CHECK_FALSE(symmetry_witness(p).has_value());
  }
  const PairMap asym = from_rows({{0, 1}, {2, 3}});
  CHECK_FALSE(is_symmetric(asym));
  const auto w = symmetry_witness(asym);
  REQUIRE(w.has_value());
  CHECK(w->x == 0);
  CHECK(w->y == 1);
}

TEST_CASE("induced quasiorder on a two-chain") {
  const PairMap p = from_rows({{0, 1}, {1, 1}});
  const Relation leq = quasiorder_leq_p(p);
  CHECK(leq.get(0, 0));
  CHECK(leq.get(0, 1));
  CHECK_FALSE(leq.get(1, 0));
  CHECK(leq.get(1, 1));
  CHECK(leq.is_partial_order());
}

TEST_CASE("transform_max keeps self-distances and stays submodular") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const PairMap p = random_submodular(seed);
    const PairMap q = transform_max(p);
    CHECK(is_submodular_quiet(q));
    for (int x = 0; x < p.size(); ++x) {
      CHECK(q.self(x) == p.self(x));
      for (int y = 0; y < p.size(); ++y) {
        CHECK(q.at(x, y) == rat_max(p.self(x), p.at(x, y)));
      }
    }
  }
}

TEST_CASE("transform_shift keeps submodularity on both sides") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const PairMap p = random_submodular(seed);
    std::vector<Rational> f;
    for (int i = 0; i < p.size(); ++i) {
      f.push_back(rat_frac(static_cast<long>((seed + i) % 7) - 3, 2));
    }
    for (const ShiftSide side : {ShiftSide::Left, ShiftSide::Right}) {
      const PairMap q = transform_shift(p, f, side);
      CHECK(is_submodular_quiet(q));
      const Rational expect = side == ShiftSide::Left
                                  ? Rational(f[0] + p.at(0, p.size() - 1))
                                  : Rational(p.at(0, p.size() - 1) +
                                             f[static_cast<std::size_t>(
                                                 p.size() - 1)]);
      CHECK(q.at(0, p.size() - 1) == expect);
    }
  }
}

TEST_CASE("concave piecewise-linear composition") {
  // f(t) = min(t, t/2 + 3/2) on [0, inf): increasing and concave.
  const ConcavePL f({{Rational(1), Rational(0)},
                     {Rational(1, 2), Rational(3, 2)}},
                    Rational(0), std::nullopt);
  CHECK(f(Rational(0)) == 0);
  CHECK(f(Rational(1)) == 1);
  CHECK(f(Rational(2)) == 2);
  CHECK(f(Rational(3)) == 3);
  CHECK(f(Rational(5)) == 4);
  CHECK(f.contains(Rational(7)));
  CHECK_FALSE(f.contains(Rational(-1)));

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    // Join valuations dominate their diagonal, which the composition needs.
    const PairMap p = random_grid_ppm(seed, false).map;
    const PairMap q = transform_concave(p, f);
    CHECK(is_submodular_quiet(q));
    CHECK(q.at(0, 0) == f(p.at(0, 0)));
  }
}

TEST_CASE("kunzi transform") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const PairMap p = random_grid_ppm(seed, true).map;
    const PairMap q = transform_kunzi(p, Rational(1));
    CHECK(is_submodular_quiet(q));
    for (int x = 0; x < p.size(); ++x) {
      for (int y = 0; y < p.size(); ++y) {
        CHECK(q.at(x, y) == p.at(x, y) / (1 + p.at(x, y)));
      }
    }
  }
  // b must keep the denominator positive.
  const PairMap chain = from_rows({{0, 1}, {1, 1}});
  CHECK_THROWS_AS(transform_kunzi(chain, Rational(0)), input_error);
}

TEST_CASE("coordinatewise join-power maps") {
  const std::vector<std::vector<Rational>> line = {{0}, {1}, {2}};
  const PairMap p2 = topkis_pairmap(line, 2);
  CHECK(p2.at(0, 1) == 1);
  CHECK(p2.at(0, 2) == 4);
  CHECK(p2.at(1, 1) == 1);
  CHECK(p2.at(2, 2) == 4);
  CHECK(is_submodular_quiet(p2));

  const std::vector<std::vector<Rational>> plane = {{0, 1}, {1, 0}};
  const PairMap p1 = topkis_pairmap(plane, 1);
  CHECK(p1.at(0, 1) == 2);
  CHECK(is_submodular_quiet(p1));

  CHECK_THROWS_AS(topkis_pairmap(line, 0), input_error);
  CHECK_THROWS_AS(topkis_pairmap({{0}, {0, 1}}, 1), input_error);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto points = random_grid_points(seed, 6, 3);
    for (int alpha = 1; alpha <= 3; ++alpha) {
      CHECK(is_submodular_quiet(topkis_pairmap(points, alpha)));
    }
  }
}

TEST_CASE("valuation pairmap on a chain is stable") {
  Relation chain(3);
  for (int x = 0; x < 3; ++x) {
    for (int y = x; y < 3; ++y) chain.set(x, y, true);
  }
  const ValuationPairmapResult r =
      valuation_pairmap(chain, {Rational(0), Rational(1), Rational(3, 2)});
  CHECK(r.stable);
  CHECK(r.p.at(0, 1) == 1);
  CHECK(r.p.at(0, 2) == Rational(3, 2));
  CHECK(r.p.at(1, 2) == Rational(3, 2));
  CHECK(r.p.at(0, 0) == 0);
  CHECK(is_submodular_quiet(r.p));

  // An antichain has no common upper bounds.
  Relation anti(2);
  anti.set(0, 0, true);
  anti.set(1, 1, true);
  CHECK_THROWS_AS(valuation_pairmap(anti, {Rational(0), Rational(0)}),
                  input_error);
}

TEST_CASE("random submodular instances are submodular") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(is_submodular_quiet(random_submodular(seed)));
  }
}
