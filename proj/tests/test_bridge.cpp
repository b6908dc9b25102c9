#include <vector>

#include "doctest.h"
#include "nisg/bridge.hpp"
#include "nisg/errors.hpp"
#include "nisg/fixtures.hpp"
#include "nisg/generators.hpp"
#include "nisg/norms.hpp"
#include "nisg/rational.hpp"
#include "nisg/semigroup.hpp"

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

// Three-element meet "V": a ^ b = c, c below both.  Commutative and
// idempotent but has no identity.
FiniteInverseSemigroup vee_semilattice() {
  SemigroupValidation v = FiniteInverseSemigroup::validate_table(
      3, {0, 2, 2, 2, 1, 2, 2, 2, 2}, {"a", "b", "c"});
  REQUIRE(v.semigroup.has_value());
  return std::move(*v.semigroup);
}

}  // namespace

TEST_CASE("skew convexity of the intrinsic metrics on Clifford fixtures") {
  for (const NormFixture& f : norm_fixtures()) {
    if (!is_clifford(f.S) || f.S.size() > 40) continue;
    const Report r = verify_dclifford(f.S, f.v);
    CHECK_MESSAGE(r.pass, f.name);
    CHECK(r.exhaustive);
  }
}

TEST_CASE("skew machinery refuses non-Clifford carriers") {
  const FiniteInverseSemigroup i2 = make_symmetric_inverse_monoid(2);
  const PairMap d(i2.size());
  CHECK_THROWS_AS(is_skew_convex(i2, d), input_error);
  CHECK_THROWS_AS(verify_dclifford(i2, Valuation(7, Rational(0))),
                  input_error);
  CHECK_THROWS_AS(norm_from_metric(i2, d), input_error);
}

TEST_CASE("a dented distance loses skew convexity but stays a metric") {
  const FiniteInverseSemigroup c3 = make_chain_semilattice(3);
  // d1 of the chain valuation (0, 1, 3/2) with d(0,2) lowered to 5/8:
  // the triangle still holds but the chain 0 <= 1 <= 2 no longer adds up.
  const PairMap dent = from_rows({{0, Rational(1, 2), Rational(5, 8)},
                                  {Rational(1, 2), 0, Rational(1, 4)},
                                  {Rational(5, 8), Rational(1, 4), 0}});
  const Report r = is_skew_convex(c3, dent);
  CHECK_FALSE(r.pass);
  const Assertion* chain = r.find("skew-chain");
  REQUIRE(chain != nullptr);
  CHECK_FALSE(chain->pass);
  const Assertion* tri = r.find("triangle");
  REQUIRE(tri != nullptr);
  CHECK(tri->pass);

  const MetricToNorm mn = norm_from_metric(c3, dent);
  CHECK_FALSE(mn.v.has_value());
  CHECK_FALSE(mn.report.pass);
}

TEST_CASE("norm reconstruction on semilattices doubles the base distance") {
  const FiniteInverseSemigroup c3 = make_chain_semilattice(3);
  const Valuation v = {0, 1, Rational(3, 2)};
  const InducedMetrics m = induced_metrics(c3, v);
  const MetricToNorm mn = norm_from_metric(c3, m.d1);
  REQUIRE(mn.v.has_value());
  CHECK(mn.report.pass);
  // Deltas fix every element, so v'(x) = 2 d1(x, 0) = v(x).
  CHECK(*mn.v == v);
}

TEST_CASE("norm reconstruction on a group returns the word norm") {
  const FiniteInverseSemigroup c4 = make_cyclic_group(4);
  const Valuation word = {0, 1, 2, 1};
  const InducedMetrics m = induced_metrics(c4, word);
  const MetricToNorm mn = norm_from_metric(c4, m.d1);
  REQUIRE(mn.v.has_value());
  CHECK(*mn.v == word);
}

TEST_CASE("roundtrip is exact on Clifford monoid fixtures") {
  for (const NormFixture& f : norm_fixtures()) {
    if (!is_clifford(f.S) || f.S.size() > 40) continue;
    const Report r = roundtrip_check(f.S, f.v);
    CHECK_MESSAGE(r.pass, f.name);
    const Assertion* a = r.find("roundtrip-exact");
    REQUIRE(a != nullptr);
    CHECK(a->pass);
  }
}

TEST_CASE("the construction needs an identity element") {
  const FiniteInverseSemigroup vee = vee_semilattice();
  CHECK(is_clifford(vee));
  CHECK_FALSE(vee.identity().has_value());
  // v = (0, 0, 1) is a pseudo-norm: meets only raise it.
  const Valuation v = {0, 0, 1};
  CHECK(validate_pseudonorm(vee, v).pass);
  const InducedMetrics m = induced_metrics(vee, v);
  CHECK_THROWS_AS(norm_from_metric(vee, m.d1), input_error);
}

TEST_CASE("counterexample family: d2 over d0 grows without bound") {
  const Report small = reproduce_counter_family(2);
  CHECK(small.pass);
  const Report r = reproduce_counter_family(1000);
  CHECK(r.pass);
  for (const char* name :
       {"d0-identity", "d1-identity", "d2-squared-identity", "ratio-identity",
        "ratio-exceeds-k", "chain-inequalities", "machinery-agrees"}) {
    const Assertion* a = r.find(name);
    REQUIRE(a != nullptr);
    CHECK(a->pass);
  }
  CHECK_THROWS_AS(reproduce_counter_family(1), input_error);
}

TEST_CASE("counterexample family frozen values at k = 3") {
  // lambda = 4/3: d0 = 1/3, d1 = 1/2 - 1/6... evaluate directly through the
  // metric machinery on p = [[1, 4/3], [4/3, 4/3]].
  const PairMap p = from_rows({{1, Rational(4, 3)}, {Rational(4, 3), Rational(4, 3)}});
  const PpmValidation pv = validate_ppm(p);
  REQUIRE(pv.ppm.has_value());
  CHECK(metric_d0(*pv.ppm).at(0, 1) == Rational(1, 3));
  CHECK(metric_d1(*pv.ppm).at(0, 1) == Rational(4, 3) - Rational(7, 6));
  CHECK(metric_d2(*pv.ppm).radicand(0, 1) ==
        Rational(16, 9) - Rational(4, 3));
  // ratio d2^2 / d0^2 = (4/9) / (1/9) = k + 1.
  CHECK(metric_d2(*pv.ppm).radicand(0, 1) ==
        Rational(4) * metric_d0(*pv.ppm).at(0, 1) * metric_d0(*pv.ppm).at(0, 1));
}
