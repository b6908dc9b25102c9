#include "nisg/norms.hpp"

#include <initializer_list>
#include <utility>

#include "nisg/errors.hpp"
#include "nisg/parallel.hpp"

namespace nisg {
namespace {

void check_valuation(const FiniteInverseSemigroup& S, const Valuation& v) {
  if (static_cast<int>(v.size()) != S.size()) {
    throw input_error("valuation size does not match the semigroup");
  }
  for (const Rational& value : v) {
    if (value < 0) throw input_error("valuation has a negative entry");
  }
}

std::vector<WitnessElement> elems(const FiniteInverseSemigroup& S,
                                  std::initializer_list<int> xs) {
  std::vector<WitnessElement> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(S.witness(x));
  return out;
}

// Every pair of idempotents has a common lower bound e (a + e = a and
// e + b = b).  Holds in any monoid.
bool idempotents_filtered(const FiniteInverseSemigroup& S) {
  for (int a : S.idempotents()) {
    for (int b : S.idempotents()) {
      bool found = false;
      for (int e : S.idempotents()) {
        if (S.op(a, e) == a && S.op(e, b) == b) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

PairMap induced_p(const FiniteInverseSemigroup& S, const Valuation& v) {
  check_valuation(S, v);
  const int n = S.size();
  PairMap p(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      p.at(x, y) = v[static_cast<std::size_t>(S.op(x, S.inv(y)))];
    }
  }
  return p;
}

PairMap induced_p_star(const FiniteInverseSemigroup& S, const Valuation& v) {
  check_valuation(S, v);
  const int n = S.size();
  PairMap p(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      p.at(x, y) = v[static_cast<std::size_t>(S.op(S.inv(x), y))];
    }
  }
  return p;
}

Report validate_pseudonorm(const FiniteInverseSemigroup& S,
                           const Valuation& v) {
  check_valuation(S, v);
  const int n = S.size();
  const PairMap p = induced_p(S, v);
  Report r;

  if (auto bad = first_bad_pair(
          n, [&](int x, int y) { return p.at(x, y) == p.at(y, x); })) {
    r.add_fail("symmetry",
               make_witness(elems(S, {bad->x, bad->y}),
                            format_rational(p.at(bad->x, bad->y)), "==",
                            format_rational(p.at(bad->y, bad->x)),
                            "v[x+y*] vs v[y+x*]"));
  } else {
    r.add_pass("symmetry");
  }

  if (auto bad = first_bad_pair(
          n, [&](int x, int y) { return p.self(x) <= p.at(x, y); })) {
    r.add_fail("self-bound",
               make_witness(elems(S, {bad->x, bad->y}),
                            format_rational(p.self(bad->x)), "<=",
                            format_rational(p.at(bad->x, bad->y)),
                            "v[x+x*] vs v[x+y*]"));
  } else {
    r.add_pass("self-bound");
  }

  if (auto bad = first_bad_triple(n, [&](int x, int y, int z) {
        return p.at(x, y) + p.self(z) <= p.at(x, z) + p.at(z, y);
      })) {
    const Rational lhs = p.at(bad->x, bad->y) + p.self(bad->z);
    const Rational rhs = p.at(bad->x, bad->z) + p.at(bad->z, bad->y);
    r.add_fail("submodularity",
               make_witness(elems(S, {bad->x, bad->y, bad->z}),
                            format_rational(lhs), "<=", format_rational(rhs),
                            "v[x+y*] + v[z+z*] vs v[x+z*] + v[z+y*]"));
  } else {
    r.add_pass("submodularity");
  }

  if (auto id = S.identity()) {
    const Rational& nid = v[static_cast<std::size_t>(*id)];
    if (nid == 0) {
      r.add_pass("identity-norm-zero");
    } else {
      r.add_fail("identity-norm-zero",
                 make_witness(elems(S, {*id}), format_rational(nid), "==", "0",
                              "the identity must have norm zero"));
    }
  }

  if (r.pass) {
    PpmValidation pv = PpmValidation::run(p, &S.labels());
    if (!pv.ppm) {
      throw invariant_error(
          "pseudo-norm axioms hold but the induced map is not a partial "
          "pseudo-metric");
    }
    r.merge(pv.report, "induced");
  }
  return r;
}

Permutability permutability(const FiniteInverseSemigroup& S,
                            const Valuation& v) {
  check_valuation(S, v);
  const int n = S.size();
  Permutability result;

  result.weak = true;
  for (int e : S.idempotents()) {
    for (int x = 0; x < n && result.weak; ++x) {
      if (v[static_cast<std::size_t>(S.op(e, x))] !=
          v[static_cast<std::size_t>(S.op(x, e))]) {
        result.weak = false;
      }
    }
    if (!result.weak) break;
  }

  result.cyclic = !first_bad_pair(n, [&](int x, int y) {
    return v[static_cast<std::size_t>(S.op(x, y))] ==
           v[static_cast<std::size_t>(S.op(y, x))];
  });

  if (result.cyclic && !result.weak) {
    throw invariant_error("cyclically permutable but not weakly permutable");
  }
  if (is_clifford(S) && !result.weak) {
    throw invariant_error("commuting deltas must make any valuation weakly "
                          "permutable");
  }
  return result;
}

Report verify_norm_properties(const FiniteInverseSemigroup& S,
                              const Valuation& v) {
  if (!validate_pseudonorm(S, v).pass) {
    throw input_error("valuation is not a pseudo-norm");
  }
  const int n = S.size();
  const PairMap p = induced_p(S, v);
  const Relation leq_s = natural_order(S);
  const Relation leq_p = quasiorder_leq_p(p);
  Report r;

  if (auto bad = first_bad_pair(n, [&](int x, int y) {
        return !leq_s.get(x, y) || leq_p.get(x, y);
      })) {
    r.add_fail("order-compatibility",
               make_witness(elems(S, {bad->x, bad->y}), "x <= y", "=>",
                            "x <=_p y",
                            "natural order must refine the induced order"));
  } else {
    r.add_pass("order-compatibility");
  }

  if (auto bad = first_bad_pair(n, [&](int x, int y) {
        return !leq_p.get(x, y) ||
               v[static_cast<std::size_t>(x)] <= v[static_cast<std::size_t>(y)];
      })) {
    r.add_fail(
        "norm-monotone",
        make_witness(elems(S, {bad->x, bad->y}),
                     format_rational(v[static_cast<std::size_t>(bad->x)]),
                     "<=", format_rational(v[static_cast<std::size_t>(bad->y)]),
                     "v must be monotone along x <=_p y"));
  } else {
    r.add_pass("norm-monotone");
  }

  {
    bool ok = true;
    int w = -1;
    for (int x = 0; x < n; ++x) {
      if (v[static_cast<std::size_t>(S.inv(x))] !=
          v[static_cast<std::size_t>(x)]) {
        ok = false;
        w = x;
        break;
      }
    }
    if (ok) {
      r.add_pass("star-invariant");
    } else {
      r.add_fail(
          "star-invariant",
          make_witness(elems(S, {w}),
                       format_rational(v[static_cast<std::size_t>(S.inv(w))]),
                       "==", format_rational(v[static_cast<std::size_t>(w)]),
                       "v[x*] vs v[x]"));
    }
  }

  {
    bool ok = true;
    int w = -1;
    for (int x = 0; x < n; ++x) {
      if (!(v[static_cast<std::size_t>(S.delta(x))] <=
            v[static_cast<std::size_t>(x)])) {
        ok = false;
        w = x;
        break;
      }
    }
    if (ok) {
      r.add_pass("delta-contraction");
    } else {
      r.add_fail(
          "delta-contraction",
          make_witness(elems(S, {w}),
                       format_rational(v[static_cast<std::size_t>(S.delta(w))]),
                       "<=", format_rational(v[static_cast<std::size_t>(w)]),
                       "v[x+x*] vs v[x]"));
    }
  }

  if (auto bad = first_bad_pair(n, [&](int x, int y) {
        return rat_max(v[static_cast<std::size_t>(S.delta(x))],
                       v[static_cast<std::size_t>(S.delta(y))]) <= p.at(x, y);
      })) {
    r.add_fail(
        "delta-pair-max",
        make_witness(elems(S, {bad->x, bad->y}),
                     format_rational(rat_max(
                         v[static_cast<std::size_t>(S.delta(bad->x))],
                         v[static_cast<std::size_t>(S.delta(bad->y))])),
                     "<=", format_rational(p.at(bad->x, bad->y)),
                     "max(v[dx], v[dy]) vs v[x+y*]"));
  } else {
    r.add_pass("delta-pair-max");
  }

  if (auto bad = first_bad_pair(n, [&](int x, int y) {
        return v[static_cast<std::size_t>(S.delta(x))] +
                   v[static_cast<std::size_t>(S.delta(y))] <=
               2 * p.at(x, y);
      })) {
    const Rational lhs = v[static_cast<std::size_t>(S.delta(bad->x))] +
                         v[static_cast<std::size_t>(S.delta(bad->y))];
    const Rational rhs = 2 * p.at(bad->x, bad->y);
    r.add_fail("delta-pair-sum",
               make_witness(elems(S, {bad->x, bad->y}), format_rational(lhs),
                            "<=", format_rational(rhs),
                            "v[dx] + v[dy] vs 2 v[x+y*]"));
  } else {
    r.add_pass("delta-pair-sum");
  }

  // t(x, y) = v[x*] + v[y] - v[x* + y] never shrinks when both arguments
  // are replaced by their idempotent deltas.
  const auto defect = [&](int x, int y) {
    return Rational(v[static_cast<std::size_t>(S.inv(x))] +
                    v[static_cast<std::size_t>(y)] -
                    v[static_cast<std::size_t>(S.op(S.inv(x), y))]);
  };
  if (auto bad = first_bad_pair(n, [&](int x, int y) {
        return defect(S.delta(x), S.delta(y)) <= defect(x, y);
      })) {
    r.add_fail("defect-monotone",
               make_witness(elems(S, {bad->x, bad->y}),
                            format_rational(defect(S.delta(bad->x),
                                                   S.delta(bad->y))),
                            "<=", format_rational(defect(bad->x, bad->y)),
                            "t(dx, dy) vs t(x, y)"));
  } else {
    r.add_pass("defect-monotone");
  }

  if (idempotents_filtered(S)) {
    if (auto bad = first_bad_pair(n, [&](int x, int y) {
          return v[static_cast<std::size_t>(S.op(x, y))] <=
                 v[static_cast<std::size_t>(x)] +
                     v[static_cast<std::size_t>(y)];
        })) {
      const Rational rhs = v[static_cast<std::size_t>(bad->x)] +
                           v[static_cast<std::size_t>(bad->y)];
      r.add_fail(
          "subadditive",
          make_witness(
              elems(S, {bad->x, bad->y}),
              format_rational(
                  v[static_cast<std::size_t>(S.op(bad->x, bad->y))]),
              "<=", format_rational(rhs),
              "v[x+y] vs v[x] + v[y]; idempotents are downward filtered"));
    } else {
      r.add_pass("subadditive");
    }
  }

  {
    // Doubling detection stands in for homogeneity; either way it forces
    // idempotent norms to vanish.
    bool doubling = true;
    for (int x = 0; x < n; ++x) {
      if (v[static_cast<std::size_t>(S.op(x, x))] !=
          2 * v[static_cast<std::size_t>(x)]) {
        doubling = false;
        break;
      }
    }
    if (doubling) {
      bool ok = true;
      int w = -1;
      for (int e : S.idempotents()) {
        if (v[static_cast<std::size_t>(e)] != 0) {
          ok = false;
          w = e;
          break;
        }
      }
      if (ok) {
        r.add_pass("homogeneous-idempotents-zero");
      } else {
        r.add_fail("homogeneous-idempotents-zero",
                   make_witness(elems(S, {w}),
                                format_rational(v[static_cast<std::size_t>(w)]),
                                "==", "0",
                                "v[e+e] = 2 v[e] forces v[e] = 0"));
      }
    }
  }

  return r;
}

RestrictedNorm restricted_norm(const FiniteInverseSemigroup& S,
                               const Valuation& v, int e) {
  check_valuation(S, v);
  if (e < 0 || e >= S.size() || !S.is_idempotent(e)) {
    throw input_error("restriction point must be an idempotent");
  }
  const bool ambient = validate_pseudonorm(S, v).pass;
  LocalMonoid lm = local_monoid(S, e);
  Valuation shifted;
  shifted.reserve(lm.elements.size());
  for (int parent : lm.elements) {
    Rational value = v[static_cast<std::size_t>(parent)] -
                     v[static_cast<std::size_t>(e)];
    if (value < 0) {
      if (ambient) {
        throw invariant_error("negative restricted value for a pseudo-norm");
      }
      throw input_error("restricted value went negative; the valuation is "
                        "not a pseudo-norm");
    }
    shifted.push_back(std::move(value));
  }
  if (ambient) {
    Report sub = validate_pseudonorm(lm.monoid, shifted);
    if (!sub.pass) {
      throw invariant_error("restriction of a pseudo-norm must stay one");
    }
    if (const Assertion* a = sub.find("identity-norm-zero");
        a == nullptr || !a->pass) {
      throw invariant_error("restricted norm must vanish at the identity");
    }
  }
  return {std::move(lm), std::move(shifted)};
}

std::optional<Witness> norm_separation_witness(const FiniteInverseSemigroup& S,
                                               const Valuation& v) {
  check_valuation(S, v);
  const int n = S.size();
  for (int e : S.idempotents()) {
    for (int x = 0; x < n; ++x) {
      if (x == e || S.op(x, e) != x || S.op(e, x) != x) continue;
      if (v[static_cast<std::size_t>(x)] == v[static_cast<std::size_t>(e)]) {
        return make_witness(
            elems(S, {x, e}), format_rational(v[static_cast<std::size_t>(x)]),
            "==", format_rational(v[static_cast<std::size_t>(e)]),
            "distinct element of a local monoid with the norm of its "
            "identity");
      }
    }
  }
  return std::nullopt;
}

bool is_norm(const FiniteInverseSemigroup& S, const Valuation& v) {
  return !norm_separation_witness(S, v);
}

NormClassification classify(const FiniteInverseSemigroup& S,
                            const Valuation& v) {
  check_valuation(S, v);
  const int n = S.size();
  NormClassification c;

  const Report axioms = validate_pseudonorm(S, v);
  c.is_pseudonorm = axioms.pass;
  if (!c.is_pseudonorm) {
    for (const Assertion& a : axioms.assertions) {
      if (!a.pass && a.witness) {
        c.witnesses.emplace_back("is_pseudonorm", *a.witness);
        break;
      }
    }
  }

  const Permutability perm = permutability(S, v);
  c.weakly_permutable = perm.weak;
  c.cyclically_permutable = perm.cyclic;
  if (!perm.weak) {
    for (int e : S.idempotents()) {
      bool done = false;
      for (int x = 0; x < n; ++x) {
        if (v[static_cast<std::size_t>(S.op(e, x))] !=
            v[static_cast<std::size_t>(S.op(x, e))]) {
          c.witnesses.emplace_back(
              "weakly_permutable",
              make_witness(
                  elems(S, {e, x}),
                  format_rational(v[static_cast<std::size_t>(S.op(e, x))]),
                  "==",
                  format_rational(v[static_cast<std::size_t>(S.op(x, e))]),
                  "v[e+x] vs v[x+e]"));
          done = true;
          break;
        }
      }
      if (done) break;
    }
  }

  const PairMap p = induced_p(S, v);
  if (c.is_pseudonorm && perm.cyclic != (p == induced_p_star(S, v))) {
    throw invariant_error("cyclic permutability must coincide with the "
                          "agreement of the two induced maps");
  }

  if (auto w = norm_separation_witness(S, v)) {
    c.is_norm = false;
    c.witnesses.emplace_back("is_norm", *w);
  } else {
    c.is_norm = true;
  }

  {
    PairMap d1(n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        d1.at(x, y) = p.at(x, y) - (p.self(x) + p.self(y)) / 2;
      }
    }
    const bool axioms_ok =
        is_symmetric(d1) &&
        !first_bad_pair(n, [&](int x, int y) {
          return d1.at(x, y) >= 0 && (x != y || d1.at(x, y) == 0);
        }) &&
        !first_bad_triple(n, [&](int x, int y, int z) {
          return d1.at(x, z) <= d1.at(x, y) + d1.at(y, z);
        });
    if (!axioms_ok && c.is_pseudonorm) {
      throw invariant_error("mean-corrected distance of a pseudo-norm must "
                            "be a pseudo-metric");
    }
    auto merged = first_bad_pair(
        n, [&](int x, int y) { return x == y || d1.at(x, y) != 0; });
    c.d1_is_metric = axioms_ok && !merged;
    if (axioms_ok && merged) {
      c.witnesses.emplace_back(
          "d1_is_metric",
          make_witness(elems(S, {merged->x, merged->y}), "d1(x,y)", "==", "0",
                       "distinct points at distance zero"));
    }
  }

  {
    PpmValidation pv = PpmValidation::run(p, &S.labels());
    if (!pv.ppm) {
      c.p_is_partial_metric = false;
    } else if (auto bad = partial_metric_witness(*pv.ppm)) {
      c.p_is_partial_metric = false;
      c.witnesses.emplace_back(
          "p_is_partial_metric",
          make_witness(elems(S, {bad->x, bad->y}),
                       format_rational(p.self(bad->x)),
                       "==", format_rational(p.at(bad->x, bad->y)),
                       "p(x,x) = p(x,y) = p(y,y) on distinct points"));
    } else {
      c.p_is_partial_metric = true;
    }
  }

  const Relation leq_p = quasiorder_leq_p(p);
  c.leq_p_antisymmetric = leq_p.antisymmetric();
  if (!c.leq_p_antisymmetric) {
    if (auto bad = first_bad_pair(n, [&](int x, int y) {
          return x == y || !leq_p.get(x, y) || !leq_p.get(y, x);
        })) {
      c.witnesses.emplace_back(
          "leq_p_antisymmetric",
          make_witness(elems(S, {bad->x, bad->y}), "x <=_p y and y <=_p x",
                       "=>", "x = y", "two-sided comparable distinct pair"));
    }
  }

  const Relation leq_s = natural_order(S);
  c.leq_p_equals_leq_s = leq_p == leq_s;
  if (!c.leq_p_equals_leq_s) {
    if (auto bad = first_bad_pair(n, [&](int x, int y) {
          return leq_p.get(x, y) == leq_s.get(x, y);
        })) {
      c.witnesses.emplace_back(
          "leq_p_equals_leq_s",
          make_witness(elems(S, {bad->x, bad->y}),
                       leq_p.get(bad->x, bad->y) ? "x <=_p y" : "x <= y", "=>",
                       leq_p.get(bad->x, bad->y) ? "x <= y" : "x <=_p y",
                       "pair comparable under exactly one of the orders"));
    }
  }

  if (c.is_pseudonorm && c.weakly_permutable) {
    const bool flags[] = {c.is_norm, c.d1_is_metric, c.p_is_partial_metric,
                          c.leq_p_antisymmetric, c.leq_p_equals_leq_s};
    for (bool f : flags) {
      if (f != flags[0]) {
        throw invariant_error("separation conditions diverged for a weakly "
                              "permutable pseudo-norm");
      }
    }
    if (flags[0]) {
      if (quasiorder_leq_p(induced_p_star(S, v)) != leq_p) {
        throw invariant_error("the two induced orders must agree once "
                              "separation holds");
      }
      for (int e : S.idempotents()) {
        for (int f : S.idempotents()) {
          if (e != f && leq_s.get(e, f) &&
              !(v[static_cast<std::size_t>(e)] <
                v[static_cast<std::size_t>(f)])) {
            throw invariant_error("norm must be strictly increasing on "
                                  "idempotents once separation holds");
          }
        }
      }
    }
  }

  return c;
}

InducedMetrics induced_metrics(const FiniteInverseSemigroup& S,
                               const Valuation& v) {
  if (!validate_pseudonorm(S, v).pass) {
    throw input_error("valuation is not a pseudo-norm");
  }
  PpmValidation pv = PpmValidation::run(induced_p(S, v), &S.labels());
  if (!pv.ppm) {
    throw invariant_error("induced map of a pseudo-norm must validate");
  }
  const PartialPseudoMetric& ppm = *pv.ppm;
  return {ppm.map(), metric_d0(ppm), metric_d1(ppm), metric_d2(ppm)};
}

Report check_subinvariance_and_convexity(const FiniteInverseSemigroup& S,
                                         const Valuation& v) {
  const InducedMetrics m = induced_metrics(S, v);
  const int n = S.size();
  const Relation leq_s = natural_order(S);
  Report r;

  const auto subinvariant = [&](const char* name, const PairMap& d) {
    if (auto bad = first_bad_triple(n, [&](int x, int y, int z) {
          const int a = S.op(x, S.inv(y));
          const int b = S.op(z, S.inv(y));
          return d.at(a, b) <= d.at(x, z);
        })) {
      const int a = S.op(bad->x, S.inv(bad->y));
      const int b = S.op(bad->z, S.inv(bad->y));
      r.add_fail(name, make_witness(elems(S, {bad->x, bad->y, bad->z}),
                                    format_rational(d.at(a, b)), "<=",
                                    format_rational(d.at(bad->x, bad->z)),
                                    "d(x+y*, z+y*) vs d(x, z)"));
    } else {
      r.add_pass(name);
    }
  };
  subinvariant("d0-right-subinvariant", m.d0);
  subinvariant("d1-right-subinvariant", m.d1);

  const auto radially_convex = [&](const char* name, const PairMap& d) {
    if (auto bad = first_bad_triple(n, [&](int x, int y, int z) {
          if (!leq_s.get(x, y) || !leq_s.get(y, z)) return true;
          return d.at(x, z) == d.at(x, y) + d.at(y, z);
        })) {
      const Rational rhs = d.at(bad->x, bad->y) + d.at(bad->y, bad->z);
      r.add_fail(name, make_witness(elems(S, {bad->x, bad->y, bad->z}),
                                    format_rational(d.at(bad->x, bad->z)),
                                    "==", format_rational(rhs),
                                    "d(x,z) vs d(x,y) + d(y,z) along "
                                    "x <= y <= z"));
    } else {
      r.add_pass(name);
    }
  };
  radially_convex("d0-radially-convex", m.d0);
  radially_convex("d1-radially-convex", m.d1);

  {
    bool ok = true;
    Witness w;
    for (int e : S.idempotents()) {
      for (int x = 0; x < n && ok; ++x) {
        if (S.op(x, e) != x || S.op(e, x) != x) continue;
        const Rational expected = v[static_cast<std::size_t>(x)] -
                                  v[static_cast<std::size_t>(e)];
        if (m.d0.at(x, e) != expected) {
          ok = false;
          w = make_witness(elems(S, {x, e}), format_rational(m.d0.at(x, e)),
                           "==", format_rational(expected),
                           "d0(x, e) vs v[x] - v[e] on the local monoid");
        }
      }
      if (!ok) break;
    }
    if (ok) {
      r.add_pass("d0-local-distance");
    } else {
      r.add_fail("d0-local-distance", std::move(w));
    }
  }

  // Pairs admitting a common lower bound collapse to their deltas.
  std::vector<char> has_lb(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (leq_s.get(z, x) && leq_s.get(z, y)) {
          has_lb[static_cast<std::size_t>(x) * n + y] = 1;
          break;
        }
      }
    }
  }
  const auto delta_collapse = [&](const char* name, auto&& value,
                                  auto&& text) {
    if (auto bad = first_bad_pair(n, [&](int x, int y) {
          if (!has_lb[static_cast<std::size_t>(x) * n + y]) return true;
          return value(x, y) == value(S.delta(x), S.delta(y));
        })) {
      r.add_fail(name,
                 make_witness(elems(S, {bad->x, bad->y}),
                              text(bad->x, bad->y),
                              "==", text(S.delta(bad->x), S.delta(bad->y)),
                              "d(x,y) vs d(dx,dy) on a pair with a common "
                              "lower bound"));
    } else {
      r.add_pass(name);
    }
  };
  delta_collapse(
      "d0-delta-collapse",
      [&](int a, int b) -> const Rational& { return m.d0.at(a, b); },
      [&](int a, int b) { return format_rational(m.d0.at(a, b)); });
  delta_collapse(
      "d1-delta-collapse",
      [&](int a, int b) -> const Rational& { return m.d1.at(a, b); },
      [&](int a, int b) { return format_rational(m.d1.at(a, b)); });
  delta_collapse(
      "d2-delta-collapse",
      [&](int a, int b) -> const Rational& { return m.d2.radicand(a, b); },
      [&](int a, int b) { return format_sqrt(m.d2.at(a, b)); });

  const Permutability perm = permutability(S, v);
  if (perm.cyclic) {
    if (auto bad = first_bad_quad(n, [&](int x1, int x2, int y1, int y2) {
          return m.d1.at(S.op(x1, x2), S.op(y1, y2)) <=
                 m.d1.at(x1, y1) + m.d1.at(x2, y2);
        })) {
      const Rational lhs =
          m.d1.at(S.op(bad->x1, bad->x2), S.op(bad->y1, bad->y2));
      const Rational rhs =
          m.d1.at(bad->x1, bad->y1) + m.d1.at(bad->x2, bad->y2);
      r.add_fail("d1-op-compatible",
                 make_witness(elems(S, {bad->x1, bad->x2, bad->y1, bad->y2}),
                              format_rational(lhs), "<=",
                              format_rational(rhs),
                              "d1(x1+x2, y1+y2) vs d1(x1,y1) + d1(x2,y2)"));
    } else {
      r.add_pass("d1-op-compatible");
    }
  }
  if (perm.weak) {
    if (auto bad = first_bad_pair(n, [&](int x, int y) {
          const Rational& low = v[static_cast<std::size_t>(S.delta(x))];
          const Rational& mid =
              v[static_cast<std::size_t>(S.op(S.delta(y), S.delta(x)))];
          return low <= mid &&
                 mid + low <= 2 * v[static_cast<std::size_t>(
                                      S.op(y, S.inv(x)))];
        })) {
      const Rational low = v[static_cast<std::size_t>(S.delta(bad->x))];
      const Rational mid = v[static_cast<std::size_t>(
          S.op(S.delta(bad->y), S.delta(bad->x)))];
      const Rational high =
          2 * v[static_cast<std::size_t>(S.op(bad->y, S.inv(bad->x)))] - low;
      r.add_fail("delta-norm-envelope",
                 make_witness(elems(S, {bad->x, bad->y}),
                              format_rational(mid), "between",
                              format_rational(low) + " and " +
                                  format_rational(high),
                              "v[dy+dx] vs v[dx] and 2 v[y+x*] - v[dx]"));
    } else {
      r.add_pass("delta-norm-envelope");
    }
  }

  return r;
}

}  // namespace nisg
