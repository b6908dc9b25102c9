#include "nisg/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "nisg/errors.hpp"
#include "nisg/generators.hpp"

namespace nisg {
namespace {

// Distance to the identity along the generator and its inverse.
Valuation cyclic_word_norm(int n) {
  Valuation v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.emplace_back(std::min(i, n - i));
  return v;
}

Valuation scale(Valuation v, const Rational& factor) {
  for (Rational& x : v) x *= factor;
  return v;
}

Valuation zero_valuation(int n) {
  return Valuation(static_cast<std::size_t>(n), Rational(0));
}

Valuation powerset_cardinality(int ground) {
  Valuation v;
  v.reserve(std::size_t{1} << ground);
  for (unsigned mask = 0; mask < (1u << ground); ++mask) {
    v.emplace_back(std::popcount(mask));
  }
  return v;
}

// Size of the intersection with a fixed trace set: monotone and submodular
// but constant across sets that differ outside the trace, so it cannot
// separate.
Valuation powerset_trace(int ground, unsigned trace) {
  Valuation v;
  v.reserve(std::size_t{1} << ground);
  for (unsigned mask = 0; mask < (1u << ground); ++mask) {
    v.emplace_back(std::popcount(mask & trace));
  }
  return v;
}

// Defect n - rank on partial bijections of an n-point set; the label
// "[t0,t1,..]" lists targets with "-" for undefined points.
Valuation rank_defect(const FiniteInverseSemigroup& S, int points) {
  Valuation v;
  v.reserve(static_cast<std::size_t>(S.size()));
  for (int x = 0; x < S.size(); ++x) {
    const std::string& label = S.label(x);
    int rank = 0;
    for (char c : label) {
      if (c != '[' && c != ']' && c != ',' && c != '-') ++rank;
    }
    v.emplace_back(points - rank);
  }
  return v;
}

// Componentwise sum of valuations along the product index ia * nb + ib.
Valuation product_sum(const Valuation& va, const Valuation& vb) {
  Valuation v;
  v.reserve(va.size() * vb.size());
  for (const Rational& a : va) {
    for (const Rational& b : vb) v.emplace_back(a + b);
  }
  return v;
}

Valuation product_max(const Valuation& va, const Valuation& vb) {
  Valuation v;
  v.reserve(va.size() * vb.size());
  for (const Rational& a : va) {
    for (const Rational& b : vb) v.emplace_back(rat_max(a, b));
  }
  return v;
}

Valuation chain_values(std::vector<Rational> values) { return values; }

std::vector<NormFixture> build_norm_fixtures() {
  std::vector<NormFixture> out;
  const auto add = [&out](std::string name, FiniteInverseSemigroup S,
                          Valuation v, bool weak, bool sep) {
    if (v.size() != static_cast<std::size_t>(S.size())) {
      throw invariant_error("fixture valuation size mismatch");
    }
    out.push_back({std::move(name), std::move(S), std::move(v), weak, sep});
  };

  add("trivial-zero", make_trivial(), zero_valuation(1), true, true);
  for (int n = 2; n <= 6; ++n) {
    add("cyclic-" + std::to_string(n) + "-word", make_cyclic_group(n),
        cyclic_word_norm(n), true, true);
  }
  add("cyclic-4-discrete", make_cyclic_group(4),
      chain_values({0, 1, 1, 1}), true, true);
  add("cyclic-6-half-word", make_cyclic_group(6),
      scale(cyclic_word_norm(6), Rational(1, 2)), true, true);

  add("chain-2", make_chain_semilattice(2), chain_values({0, 1}), true, true);
  add("chain-3", make_chain_semilattice(3),
      chain_values({0, 1, Rational(3, 2)}), true, true);
  add("chain-4", make_chain_semilattice(4),
      chain_values({0, Rational(1, 2), 1, 2}), true, true);
  add("chain-5", make_chain_semilattice(5),
      chain_values({0, 1, 2, Rational(5, 2), 4}), true, true);
  add("chain-4-plateau", make_chain_semilattice(4),
      chain_values({0, 1, 1, 2}), true, false);

  add("powerset-2-cardinality", make_powerset_semilattice(2),
      powerset_cardinality(2), true, true);
  add("powerset-3-cardinality", make_powerset_semilattice(3),
      powerset_cardinality(3), true, true);
  add("powerset-4-cardinality", make_powerset_semilattice(4),
      powerset_cardinality(4), true, true);
  add("powerset-3-trace", make_powerset_semilattice(3),
      powerset_trace(3, 0b011), true, false);
  add("powerset-2-zero", make_powerset_semilattice(2), zero_valuation(4),
      true, false);

  {
    const Valuation c3 = chain_values({0, 1, 2});
    const Valuation c4 = chain_values({0, 1, 2, 3});
    const Valuation c2 = chain_values({0, 1});
    add("grid-3x3-sum",
        make_direct_product(make_chain_semilattice(3),
                            make_chain_semilattice(3)),
        product_sum(c3, c3), true, true);
    add("grid-4x2-sum",
        make_direct_product(make_chain_semilattice(4),
                            make_chain_semilattice(2)),
        product_sum(c4, c2), true, true);
    // The max valuation keeps the axioms but collapses (1,0) and (1,1).
    add("grid-3x3-max",
        make_direct_product(make_chain_semilattice(3),
                            make_chain_semilattice(3)),
        product_max(c3, c3), true, false);
  }

  add("product-c3-chain3",
      make_direct_product(make_cyclic_group(3), make_chain_semilattice(3)),
      product_sum(cyclic_word_norm(3), chain_values({0, 1, 2})), true, true);
  add("product-c2-c3",
      make_direct_product(make_cyclic_group(2), make_cyclic_group(3)),
      product_sum(cyclic_word_norm(2), cyclic_word_norm(3)), true, true);
  add("product-c8-powerset3",
      make_direct_product(make_cyclic_group(8), make_powerset_semilattice(3)),
      product_sum(cyclic_word_norm(8), powerset_cardinality(3)), true, true);

  add("sym-inverse-2-zero", make_symmetric_inverse_monoid(2),
      zero_valuation(7), true, false);
  {
    FiniteInverseSemigroup i2 = make_symmetric_inverse_monoid(2);
    Valuation v = rank_defect(i2, 2);
    add("sym-inverse-2-rank", std::move(i2), std::move(v), false, false);
  }
  {
    FiniteInverseSemigroup i3 = make_symmetric_inverse_monoid(3);
    Valuation v = rank_defect(i3, 3);
    add("sym-inverse-3-rank", std::move(i3), std::move(v), false, false);
  }

  return out;
}

std::vector<FiniteInverseSemigroup> build_semigroup_fixtures() {
  std::vector<FiniteInverseSemigroup> out;
  out.push_back(make_symmetric_inverse_monoid(2));
  out.push_back(make_symmetric_inverse_monoid(3));
  for (int g = 1; g <= 4; ++g) out.push_back(make_powerset_semilattice(g));
  for (int n = 2; n <= 6; ++n) out.push_back(make_cyclic_group(n));
  out.push_back(
      make_direct_product(make_cyclic_group(2), make_chain_semilattice(3)));
  out.push_back(
      make_direct_product(make_cyclic_group(8), make_powerset_semilattice(3)));
  out.push_back(
      make_direct_product(make_cyclic_group(4), make_cyclic_group(4)));
  return out;
}

}  // namespace

const std::vector<NormFixture>& norm_fixtures() {
  static const std::vector<NormFixture> fixtures = build_norm_fixtures();
  return fixtures;
}

const std::vector<FiniteInverseSemigroup>& semigroup_fixtures() {
  static const std::vector<FiniteInverseSemigroup> fixtures =
      build_semigroup_fixtures();
  return fixtures;
}

}  // namespace nisg
