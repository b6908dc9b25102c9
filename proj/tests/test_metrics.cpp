#include <vector>

#include "doctest.h"
#include "nisg/errors.hpp"
#include "nisg/metrics.hpp"
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

const PartialPseudoMetric& require_ppm(const PpmValidation& v) {
  REQUIRE(v.report.pass);
  REQUIRE(v.ppm.has_value());
  return *v.ppm;
}

}  // namespace

TEST_CASE("validate_ppm on the two-chain join map") {
  const PpmValidation v = validate_ppm(from_rows({{0, 1}, {1, 1}}));
  const PartialPseudoMetric& p = require_ppm(v);
  CHECK(p.self(0) == 0);
  CHECK(p.self(1) == 1);
  CHECK(is_partial_metric(p));
  CHECK_FALSE(partial_metric_witness(p).has_value());
}

TEST_CASE("validate_ppm rejects an unbounded diagonal") {
  const PpmValidation v = validate_ppm(from_rows({{2, 1}, {1, 0}}));
  CHECK_FALSE(v.ppm.has_value());
  const Assertion* a = v.report.find("self-bound");
  REQUIRE(a != nullptr);
  CHECK_FALSE(a->pass);
  REQUIRE(a->witness.has_value());
}

TEST_CASE("constant maps are pseudo but not partial metrics") {
  const PpmValidation v = validate_ppm(from_rows({{1, 1}, {1, 1}}));
  const PartialPseudoMetric& p = require_ppm(v);
  CHECK_FALSE(is_partial_metric(p));
  const auto w = partial_metric_witness(p);
  REQUIRE(w.has_value());
  CHECK(w->x == 0);
  CHECK(w->y == 1);
}

TEST_CASE("intrinsic metrics of the two-chain") {
  const PartialPseudoMetric p =
      require_ppm(validate_ppm(from_rows({{0, 1}, {1, 1}})));

  const PairMap q0 = adjoint_q0(p);
  CHECK(q0.at(0, 1) == 0);
  CHECK(q0.at(1, 1) == 1);
  const PairMap q1 = adjoint_q1(p);
  CHECK(q1.at(0, 1) == Rational(1, 2));

  const PairMap d0 = metric_d0(p);
  CHECK(d0.at(0, 1) == 1);
  CHECK(d0.at(0, 0) == 0);
  CHECK(d0.at(1, 1) == 0);

  const PairMap d1 = metric_d1(p);
  CHECK(d1.at(0, 1) == Rational(1, 2));
  CHECK(d1.at(1, 0) == Rational(1, 2));
  CHECK(d1.at(0, 0) == 0);

  const SqrtMatrix d2 = metric_d2(p);
  CHECK(d2.radicand(0, 1) == 1);
  CHECK(d2.radicand(0, 0) == 0);
  CHECK(sqrt_eq(d2.at(0, 1), SqrtVal{Rational(1)}));
}

TEST_CASE("metric chain and d2 inequalities on random instances") {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const RandomGridInstance inst = random_grid_ppm(seed, seed % 2 == 1);
    const PartialPseudoMetric p = require_ppm(validate_ppm(inst.map));
    CHECK(check_metric_chain(p).pass);
    CHECK(check_d2_core_inequality(p).pass);
    CHECK(check_radial_convexity(p).pass);
    if (inst.strict) CHECK(is_partial_metric(p));
  }
}

TEST_CASE("interlaced validation computes the least constant") {
  const PairMap p = from_rows({{0, 1}, {1, 1}});
  const PartialPseudoMetric ppm = require_ppm(validate_ppm(p));
  const InterlacedValidation v = validate_interlaced(p, adjoint_q1(ppm));
  REQUIRE(v.space.has_value());
  CHECK(v.report.pass);
  // w(1) + k q(1,0) <= k p(1,0) + w(0) forces k >= 2, and 2 works.
  CHECK(v.space->k_min() == 2);
  CHECK(v.report.k_min.has_value());
  CHECK(*v.report.k_min == 2);
}

TEST_CASE("interlaced validation rejects a non-adjoint pair") {
  // -q must be submodular; this q fails that at (0,0,1).
  const PairMap p = from_rows({{0, 2}, {2, 1}});
  const PairMap q = from_rows({{0, 1}, {1, 1}});
  const InterlacedValidation v = validate_interlaced(p, q);
  CHECK_FALSE(v.space.has_value());
  CHECK_FALSE(v.report.pass);
  // Mismatched diagonals always fail.
  const InterlacedValidation bad =
      validate_interlaced(p, from_rows({{1, 1}, {1, 1}}));
  CHECK_FALSE(bad.space.has_value());
  const Assertion* a = bad.report.find("diagonal-match");
  REQUIRE(a != nullptr);
  CHECK_FALSE(a->pass);
}

TEST_CASE("intrinsic distance is p minus q") {
  const PairMap p = from_rows({{0, 1}, {1, 1}});
  const PartialPseudoMetric ppm = require_ppm(validate_ppm(p));
  const InterlacedValidation v = validate_interlaced(p, adjoint_q1(ppm));
  REQUIRE(v.space.has_value());
  const PairMap d = intrinsic_dpq(*v.space);
  CHECK(d == metric_d1(ppm));
  CHECK(check_order_metric_compat(*v.space).pass);
  CHECK(check_d1_envelope(*v.space).pass);
}

TEST_CASE("order from the interlaced pair") {
  const PairMap p = from_rows({{0, 1}, {1, 1}});
  const PartialPseudoMetric ppm = require_ppm(validate_ppm(p));
  const InterlacedValidation v = validate_interlaced(p, adjoint_q1(ppm));
  REQUIRE(v.space.has_value());
  const Relation leq = order_pq(*v.space);
  CHECK(leq.get(0, 1));
  CHECK_FALSE(leq.get(1, 0));
  CHECK(leq.is_partial_order());
}

TEST_CASE("classification flags agree") {
  const PairMap sep = from_rows({{0, 1}, {1, 1}});
  const PartialPseudoMetric ppm = require_ppm(validate_ppm(sep));
  const InterlacedValidation v = validate_interlaced(sep, adjoint_q1(ppm));
  REQUIRE(v.space.has_value());
  const InterlacedClassification c = classify_interlaced(*v.space);
  CHECK(c.interlaced);
  CHECK(c.dpq_is_metric);
  CHECK(c.leq_pq_antisymmetric);
  CHECK_FALSE(c.witness.has_value());

  const PairMap flat = from_rows({{1, 1}, {1, 1}});
  const PartialPseudoMetric fppm = require_ppm(validate_ppm(flat));
  const InterlacedValidation fv = validate_interlaced(flat, adjoint_q1(fppm));
  REQUIRE(fv.space.has_value());
  const InterlacedClassification fc = classify_interlaced(*fv.space);
  CHECK_FALSE(fc.interlaced);
  CHECK_FALSE(fc.dpq_is_metric);
  CHECK_FALSE(fc.leq_pq_antisymmetric);
  CHECK(fc.witness.has_value());
}

TEST_CASE("quotient collapses zero-distance pairs") {
  const PairMap flat = from_rows({{1, 1}, {1, 1}});
  const PartialPseudoMetric fppm = require_ppm(validate_ppm(flat));
  const InterlacedValidation fv = validate_interlaced(flat, adjoint_q1(fppm));
  REQUIRE(fv.space.has_value());
  const QuotientResult q = quotient_interlaced(*fv.space);
  CHECK(q.space.size() == 1);
  CHECK(q.projection == std::vector<int>{0, 0});

  // A separating space quotients to itself.
  const PairMap sep = from_rows({{0, 1}, {1, 1}});
  const PartialPseudoMetric ppm = require_ppm(validate_ppm(sep));
  const InterlacedValidation v = validate_interlaced(sep, adjoint_q1(ppm));
  REQUIRE(v.space.has_value());
  const QuotientResult idq = quotient_interlaced(*v.space);
  CHECK(idq.space.size() == 2);
  CHECK(idq.projection == std::vector<int>{0, 1});
  CHECK(idq.space.p() == sep);
}

TEST_CASE("quotient merges duplicated points on random instances") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const RandomGridInstance inst = random_grid_ppm(seed, true);
    const int n = inst.map.size();
    // Clone the last point: same row, column and diagonal entry.
    PairMap dup(n + 1);
    for (int x = 0; x <= n; ++x) {
      for (int y = 0; y <= n; ++y) {
        const int xs = x == n ? n - 1 : x;
        const int ys = y == n ? n - 1 : y;
        dup.at(x, y) = inst.map.at(xs, ys);
      }
    }
    const PartialPseudoMetric p = require_ppm(validate_ppm(dup));
    const InterlacedValidation v = validate_interlaced(dup, adjoint_q1(p));
    REQUIRE(v.space.has_value());
    const QuotientResult q = quotient_interlaced(*v.space);
    CHECK(q.space.size() == n);
    CHECK(q.projection[static_cast<std::size_t>(n)] ==
          q.projection[static_cast<std::size_t>(n - 1)]);
    const InterlacedClassification c = classify_interlaced(q.space);
    CHECK(c.interlaced);
  }
}

TEST_CASE("interlaced spaces built from both adjoints on random instances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RandomGridInstance inst = random_grid_ppm(seed, seed % 3 == 0);
    const PartialPseudoMetric p = require_ppm(validate_ppm(inst.map));
    for (const PairMap& q : {adjoint_q0(p), adjoint_q1(p)}) {
      const InterlacedValidation v = validate_interlaced(inst.map, q);
      REQUIRE(v.space.has_value());
      CHECK(v.space->k_min() <= 2);
      CHECK(check_order_metric_compat(*v.space).pass);
      CHECK(check_d1_envelope(*v.space).pass);
    }
  }
}
