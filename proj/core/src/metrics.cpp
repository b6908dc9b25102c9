#include "nisg/metrics.hpp"

#include <utility>

#include "nisg/errors.hpp"
#include "nisg/parallel.hpp"

namespace nisg {

namespace {

WitnessElement elem(int x, const std::vector<std::string>* labels) {
  if (labels && x >= 0 && x < static_cast<int>(labels->size())) {
    return {x, (*labels)[static_cast<std::size_t>(x)]};
  }
  return {x, std::to_string(x)};
}

std::string fr(const Rational& r) { return format_rational(r); }

}  // namespace

PpmValidation PpmValidation::run(const PairMap& p,
                                 const std::vector<std::string>* labels) {
  PpmValidation out;
  Report& rep = out.report;
  const int n = p.size();

  if (const auto bad = symmetry_witness(p)) {
    rep.add_fail("symmetry",
                 make_witness({elem(bad->x, labels), elem(bad->y, labels)},
                              fr(p.at(bad->x, bad->y)), "==",
                              fr(p.at(bad->y, bad->x))));
  } else {
    rep.add_pass("symmetry");
  }

  rep.merge(is_submodular(p, labels));

  bool self_nonneg = true;
  for (int x = 0; x < n && self_nonneg; ++x) {
    if (p.self(x) < 0) {
      self_nonneg = false;
      rep.add_fail("self-nonnegative",
                   make_witness({elem(x, labels)}, "0", "<=", fr(p.self(x))));
    }
  }
  if (self_nonneg) rep.add_pass("self-nonnegative");

  const auto bad_bound = first_bad_pair(
      n, [&](int x, int y) { return p.self(x) <= p.at(x, y); });
  if (bad_bound) {
    rep.add_fail("self-bound",
                 make_witness({elem(bad_bound->x, labels), elem(bad_bound->y, labels)},
                              fr(p.self(bad_bound->x)), "<=",
                              fr(p.at(bad_bound->x, bad_bound->y)),
                              "p(x,x) vs p(x,y)"));
  } else {
    rep.add_pass("self-bound");
  }

  if (rep.pass) out.ppm = PartialPseudoMetric(p);
  return out;
}

PpmValidation validate_ppm(const PairMap& p,
                           const std::vector<std::string>* labels) {
  return PpmValidation::run(p, labels);
}

std::optional<Pair> partial_metric_witness(const PartialPseudoMetric& p) {
  for (int x = 0; x < p.size(); ++x) {
    for (int y = x + 1; y < p.size(); ++y) {
      if (p.self(x) == p.at(x, y) && p.at(x, y) == p.self(y)) {
        return Pair{x, y};
      }
    }
  }
  return std::nullopt;
}

bool is_partial_metric(const PartialPseudoMetric& p) {
  return !partial_metric_witness(p);
}

SqrtMatrix::SqrtMatrix(int n, std::vector<Rational> radicands) : n_(n) {
  if (radicands.size() != static_cast<std::size_t>(n) * n) {
    throw input_error("sqrt matrix value count does not match size");
  }
  for (const Rational& r : radicands) {
    if (r < 0) throw invariant_error("SqrtMatrix: negative radicand");
  }
  r_ = std::move(radicands);
}

InterlacedValidation InterlacedValidation::run(
    const PairMap& p, const PairMap& q,
    const std::vector<std::string>* labels) {
  InterlacedValidation out;
  Report& rep = out.report;
  if (p.size() != q.size()) {
    throw input_error("interlaced space: p and q sizes differ");
  }
  const int n = p.size();

  const auto check_sym = [&](const PairMap& m, const std::string& name) {
    if (const auto bad = symmetry_witness(m)) {
      rep.add_fail(name, make_witness({elem(bad->x, labels), elem(bad->y, labels)},
                                      fr(m.at(bad->x, bad->y)), "==",
                                      fr(m.at(bad->y, bad->x))));
    } else {
      rep.add_pass(name);
    }
  };
  check_sym(p, "p-symmetric");
  check_sym(q, "q-symmetric");

  {
    Report sub = is_submodular(p, labels);
    Assertion a = sub.assertions.at(0);
    a.name = "p-submodular";
    rep.add(std::move(a));
  }
  {
    // -q submodular means q(x,z) + q(z,y) <= q(x,y) + q(z,z).
    const auto bad = first_bad_triple(n, [&](int x, int y, int z) {
      return q.at(x, z) + q.at(z, y) <= q.at(x, y) + q.self(z);
    });
    if (bad) {
      const auto [x, y, z] = *bad;
      rep.add_fail("q-supermodular",
                   make_witness({elem(x, labels), elem(y, labels), elem(z, labels)},
                                fr(q.at(x, z) + q.at(z, y)), "<=",
                                fr(q.at(x, y) + q.self(z)),
                                "q(x,z)+q(z,y) vs q(x,y)+q(z,z)"));
    } else {
      rep.add_pass("q-supermodular");
    }
  }

  bool diag_ok = true;
  for (int x = 0; x < n && diag_ok; ++x) {
    if (p.self(x) != q.self(x)) {
      diag_ok = false;
      rep.add_fail("diagonal-match",
                   make_witness({elem(x, labels)}, fr(p.self(x)), "==",
                                fr(q.self(x)), "p(x,x) vs q(x,x)"));
    }
  }
  if (diag_ok) rep.add_pass("diagonal-match");

  if (!rep.pass) return out;

  // q <= (w(x)+w(y))/2 <= p follows from the axioms already checked.
  const auto bad_between = first_bad_pair(n, [&](int x, int y) {
    const Rational mean = (p.self(x) + p.self(y)) / 2;
    return q.at(x, y) <= mean && mean <= p.at(x, y);
  });
  if (bad_between) {
    const auto [x, y] = *bad_between;
    rep.add_fail("between-bounds",
                 make_witness({elem(x, labels), elem(y, labels)},
                              fr(q.at(x, y)), "<=", fr(p.at(x, y)),
                              "q <= (w(x)+w(y))/2 <= p"));
    return out;
  }
  rep.add_pass("between-bounds");

  // Least admissible interlacing constant: on pairs with p > q the ratio
  // (w(x)-w(y)) / (p-q) bounds k from below; on pairs with p = q the
  // self-distances must already agree.
  Rational k_min(1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Rational gap = p.at(x, y) - q.at(x, y);
      const Rational rise = p.self(x) - p.self(y);
      if (gap == 0) {
        if (rise != 0) {
          rep.add_fail("interlacing-constant",
                       make_witness({elem(x, labels), elem(y, labels)},
                                    fr(p.self(x)), "==", fr(p.self(y)),
                                    "p = q off the diagonal forces equal "
                                    "self-distances; no admissible k"));
          return out;
        }
      } else if (rise > 0) {
        Rational ratio = rise / gap;
        if (k_min < ratio) k_min = std::move(ratio);
      }
    }
  }
  rep.add_pass("interlacing-constant");
  rep.k_min = k_min;
  out.space = InterlacedSpace(p, q, k_min);
  return out;
}

InterlacedValidation validate_interlaced(
    const PairMap& p, const PairMap& q,
    const std::vector<std::string>* labels) {
  return InterlacedValidation::run(p, q, labels);
}

PairMap intrinsic_dpq(const InterlacedSpace& s) {
  const int n = s.size();
  PairMap d(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      d.at(x, y) = s.p().at(x, y) - s.q().at(x, y);
    }
  }
  if (!is_symmetric(d)) throw invariant_error("intrinsic_dpq: not symmetric");
  for (int x = 0; x < n; ++x) {
    if (d.self(x) != 0) throw invariant_error("intrinsic_dpq: nonzero diagonal");
  }
  if (first_bad_pair(n, [&](int x, int y) { return d.at(x, y) >= 0; })) {
    throw invariant_error("intrinsic_dpq: negative distance");
  }
  if (first_bad_triple(n, [&](int x, int y, int z) {
        return d.at(x, y) <= d.at(x, z) + d.at(z, y);
      })) {
    throw invariant_error("intrinsic_dpq: triangle inequality fails");
  }
  if (first_bad_pair(n, [&](int x, int y) {
        return rat_abs(s.self(x) - s.self(y)) <= s.k_min() * d.at(x, y);
      })) {
    throw invariant_error("intrinsic_dpq: self-distances not Lipschitz");
  }
  return d;
}

namespace {

PairMap adjoint(const PartialPseudoMetric& p, bool mean) {
  const int n = p.size();
  PairMap q(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      q.at(x, y) = mean ? Rational((p.self(x) + p.self(y)) / 2)
                        : rat_min(p.self(x), p.self(y));
    }
  }
  InterlacedValidation v = validate_interlaced(p.map(), q);
  if (!v.space) {
    throw invariant_error("adjoint: (p, q) failed interlaced validation");
  }
  if (v.space->k_min() > 2) {
    throw invariant_error("adjoint: k = 2 is not admissible");
  }
  return q;
}

PairMap intrinsic_for(const PartialPseudoMetric& p, bool mean) {
  InterlacedValidation v =
      validate_interlaced(p.map(), adjoint(p, mean));
  return intrinsic_dpq(*v.space);
}

}  // namespace

PairMap adjoint_q0(const PartialPseudoMetric& p) { return adjoint(p, false); }
PairMap adjoint_q1(const PartialPseudoMetric& p) { return adjoint(p, true); }
PairMap metric_d0(const PartialPseudoMetric& p) {
  return intrinsic_for(p, false);
}
PairMap metric_d1(const PartialPseudoMetric& p) {
  return intrinsic_for(p, true);
}

SqrtMatrix metric_d2(const PartialPseudoMetric& p) {
  const int n = p.size();
  std::vector<Rational> rad;
  rad.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Rational r = p.at(x, y) * p.at(x, y) - p.self(x) * p.self(y);
      if (r < 0) throw invariant_error("metric_d2: negative radicand");
      if (x == y && r != 0) {
        throw invariant_error("metric_d2: nonzero diagonal");
      }
      rad.push_back(std::move(r));
    }
  }
  SqrtMatrix m(n, std::move(rad));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (m.radicand(x, y) != m.radicand(y, x)) {
        throw invariant_error("metric_d2: not symmetric");
      }
    }
  }
  if (first_bad_triple(n, [&](int x, int y, int z) {
        return sqrt_triangle_leq(m.radicand(x, y), m.radicand(x, z),
                                 m.radicand(z, y));
      })) {
    throw invariant_error("metric_d2: triangle inequality fails");
  }
  return m;
}

Report check_d2_core_inequality(const PartialPseudoMetric& p,
                                const std::vector<std::string>* labels) {
  Report rep;
  const int n = p.size();
  const auto rad = [&](int x, int z) {
    return Rational(p.at(x, z) * p.at(x, z) - p.self(x) * p.self(z));
  };
  const auto core_ok = [&](int x, int y, int z) {
    const Rational gamma =
        (p.at(x, z) - p.self(z)) * (p.at(y, z) - p.self(z));
    const Rational theta =
        (p.self(z) - p.self(x)) * (p.self(y) - p.self(z));
    const Rational lhs = 2 * gamma + theta;
    if (lhs <= 0) return true;
    return lhs * lhs <= 4 * rad(x, z) * rad(y, z);
  };
  const auto bad = first_bad_triple(n, core_ok);
  if (bad) {
    const auto [x, y, z] = *bad;
    const Rational gamma =
        (p.at(x, z) - p.self(z)) * (p.at(y, z) - p.self(z));
    const Rational theta =
        (p.self(z) - p.self(x)) * (p.self(y) - p.self(z));
    rep.add_fail("product-form-bound",
                 make_witness({elem(x, labels), elem(y, labels), elem(z, labels)},
                              fr(2 * gamma + theta), "<=",
                              format_sqrt(SqrtVal{4 * rad(x, z) * rad(y, z)}),
                              "2G+T vs 2*sqrt(D)"));
  } else {
    rep.add_pass("product-form-bound");
  }

  const auto bad_tri = first_bad_triple(n, [&](int x, int y, int z) {
    return sqrt_triangle_leq(rad(x, y), rad(x, z), rad(z, y));
  });
  if (bad_tri) {
    const auto [x, y, z] = *bad_tri;
    rep.add_fail("d2-triangle",
                 make_witness({elem(x, labels), elem(y, labels), elem(z, labels)},
                              format_sqrt(SqrtVal{rad(x, y)}), "<=",
                              format_sqrt(SqrtVal{rad(x, z)}) + " + " +
                                  format_sqrt(SqrtVal{rad(z, y)})));
  } else {
    rep.add_pass("d2-triangle");
  }
  return rep;
}

Report check_metric_chain(const PartialPseudoMetric& p,
                          const std::vector<std::string>* labels) {
  Report rep;
  const int n = p.size();
  const PairMap d0 = metric_d0(p);
  const PairMap d1 = metric_d1(p);
  const SqrtMatrix d2 = metric_d2(p);

  const auto check_pairs = [&](const std::string& name, auto&& ok,
                               auto&& lhs, auto&& rhs) {
    const auto bad = first_bad_pair(n, ok);
    if (bad) {
      rep.add_fail(name,
                   make_witness({elem(bad->x, labels), elem(bad->y, labels)},
                                lhs(bad->x, bad->y), "<=", rhs(bad->x, bad->y)));
    } else {
      rep.add_pass(name);
    }
  };
  check_pairs(
      "d0-leq-2d1",
      [&](int x, int y) { return d0.at(x, y) <= 2 * d1.at(x, y); },
      [&](int x, int y) { return fr(d0.at(x, y)); },
      [&](int x, int y) { return fr(2 * d1.at(x, y)); });
  check_pairs(
      "d1-leq-d0", [&](int x, int y) { return d1.at(x, y) <= d0.at(x, y); },
      [&](int x, int y) { return fr(d1.at(x, y)); },
      [&](int x, int y) { return fr(d0.at(x, y)); });
  check_pairs(
      "d1-leq-d2",
      [&](int x, int y) {
        return rat_leq_sqrt(d1.at(x, y), d2.at(x, y));
      },
      [&](int x, int y) { return fr(d1.at(x, y)); },
      [&](int x, int y) { return format_sqrt(d2.at(x, y)); });
  check_pairs(
      "self-gap-leq-d2",
      [&](int x, int y) {
        return rat_leq_sqrt(rat_abs(p.self(x) - p.self(y)), d2.at(x, y));
      },
      [&](int x, int y) { return fr(rat_abs(p.self(x) - p.self(y))); },
      [&](int x, int y) { return format_sqrt(d2.at(x, y)); });
  return rep;
}

Report check_radial_convexity(const PartialPseudoMetric& p,
                              const std::vector<std::string>* labels) {
  Report rep;
  const int n = p.size();
  const Relation leq = quasiorder_leq_p(p.map());
  const PairMap d0 = metric_d0(p);
  const PairMap d1 = metric_d1(p);

  const auto bad_collapse = first_bad_pair(n, [&](int x, int y) {
    return !leq.get(x, y) || p.at(x, y) == p.self(y);
  });
  if (bad_collapse) {
    const auto [x, y] = *bad_collapse;
    rep.add_fail("comparable-pairs-collapse",
                 make_witness({elem(x, labels), elem(y, labels)},
                              fr(p.at(x, y)), "==", fr(p.self(y)),
                              "p(x,y) vs p(y,y) for x <= y"));
  } else {
    rep.add_pass("comparable-pairs-collapse");
  }

  const auto check_chain = [&](const std::string& name, const PairMap& d) {
    const auto bad = first_bad_triple(n, [&](int x, int y, int z) {
      if (!leq.get(x, y) || !leq.get(y, z)) return true;
      return d.at(x, z) == d.at(x, y) + d.at(y, z);
    });
    if (bad) {
      const auto [x, y, z] = *bad;
      rep.add_fail(name,
                   make_witness({elem(x, labels), elem(y, labels), elem(z, labels)},
                                fr(d.at(x, z)), "==",
                                fr(d.at(x, y) + d.at(y, z)),
                                "additivity along x <= y <= z"));
    } else {
      rep.add_pass(name);
    }
  };
  check_chain("d0-radially-convex", d0);
  check_chain("d1-radially-convex", d1);
  return rep;
}

Report check_d1_envelope(const InterlacedSpace& s,
                         const std::vector<std::string>* labels) {
  Report rep;
  const int n = s.size();
  bool hypothesis = true;
  for (int x = 0; x < n && hypothesis; ++x) {
    for (int y = 0; y < n && hypothesis; ++y) {
      hypothesis =
          s.self(x) + s.self(y) <= s.p().at(x, y) + s.q().at(x, y);
    }
  }
  if (!hypothesis) {
    Assertion a;
    a.name = "d1-envelope-when-mean-dominated";
    a.pass = true;
    a.witness = make_witness({}, "", "", "", "hypothesis not satisfied; nothing to check");
    rep.add(std::move(a));
    return rep;
  }
  const auto bad = first_bad_pair(n, [&](int x, int y) {
    const Rational d1 = s.p().at(x, y) - (s.self(x) + s.self(y)) / 2;
    const Rational dpq = s.p().at(x, y) - s.q().at(x, y);
    return d1 <= dpq && dpq <= 2 * d1;
  });
  if (bad) {
    const auto [x, y] = *bad;
    rep.add_fail("d1-envelope-when-mean-dominated",
                 make_witness({elem(x, labels), elem(y, labels)},
                              fr(s.p().at(x, y) - (s.self(x) + s.self(y)) / 2),
                              "<=", fr(s.p().at(x, y) - s.q().at(x, y)),
                              "d1 <= p-q <= 2 d1"));
  } else {
    rep.add_pass("d1-envelope-when-mean-dominated");
  }
  return rep;
}

Relation order_pq(const InterlacedSpace& s) {
  const int n = s.size();
  Relation leq(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      leq.set(x, y, s.self(x) <= s.q().at(x, y) &&
                        s.p().at(x, y) <= s.self(y));
    }
  }
  // Cross-check: x below y for p, and y below x for -q.
  PairMap neg_q(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) neg_q.at(x, y) = -s.q().at(x, y);
  }
  const Relation leq_p = quasiorder_leq_p(s.p());
  const Relation leq_nq = quasiorder_leq_p(neg_q);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (leq.get(x, y) != (leq_p.get(x, y) && leq_nq.get(y, x))) {
        throw invariant_error("order_pq: characterizations disagree at (" +
                              std::to_string(x) + ", " + std::to_string(y) +
                              ")");
      }
    }
  }
  if (!leq.is_quasiorder()) {
    throw invariant_error("order_pq: result is not a quasiorder");
  }
  return leq;
}

InterlacedClassification classify_interlaced(
    const InterlacedSpace& s, const std::vector<std::string>* labels) {
  InterlacedClassification out;
  const int n = s.size();
  std::optional<Pair> merged;
  for (int x = 0; x < n && !merged; ++x) {
    for (int y = x + 1; y < n && !merged; ++y) {
      if (s.p().at(x, y) == s.q().at(x, y)) merged = Pair{x, y};
    }
  }
  out.interlaced = !merged;

  const PairMap d = intrinsic_dpq(s);
  out.dpq_is_metric = true;
  for (int x = 0; x < n && out.dpq_is_metric; ++x) {
    for (int y = x + 1; y < n && out.dpq_is_metric; ++y) {
      out.dpq_is_metric = d.at(x, y) != 0;
    }
  }
  out.leq_pq_antisymmetric = order_pq(s).antisymmetric();

  if (out.interlaced != out.dpq_is_metric ||
      out.interlaced != out.leq_pq_antisymmetric) {
    throw invariant_error("classify_interlaced: equivalent flags disagree");
  }
  if (merged) {
    out.witness = make_witness({elem(merged->x, labels), elem(merged->y, labels)},
                               fr(s.p().at(merged->x, merged->y)), "==",
                               fr(s.q().at(merged->x, merged->y)),
                               "p equals q on distinct points");
  }
  return out;
}

QuotientResult quotient_interlaced(const InterlacedSpace& s,
                                   const std::vector<std::string>* labels) {
  const int n = s.size();
  const PairMap d = intrinsic_dpq(s);
  std::vector<int> proj(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < x; ++y) {
      if (d.at(x, y) == 0) {
        proj[static_cast<std::size_t>(x)] = proj[static_cast<std::size_t>(y)];
        break;
      }
    }
    if (proj[static_cast<std::size_t>(x)] < 0) {
      proj[static_cast<std::size_t>(x)] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }
  // Well-definedness: p and q only depend on the classes.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int rx = reps[static_cast<std::size_t>(proj[static_cast<std::size_t>(x)])];
      const int ry = reps[static_cast<std::size_t>(proj[static_cast<std::size_t>(y)])];
      if (s.p().at(x, y) != s.p().at(rx, ry) ||
          s.q().at(x, y) != s.q().at(rx, ry)) {
        throw invariant_error(
            "quotient_interlaced: maps not representative-independent");
      }
    }
  }
  const int m = static_cast<int>(reps.size());
  PairMap qp(m), qq(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      qp.at(i, j) = s.p().at(reps[static_cast<std::size_t>(i)],
                             reps[static_cast<std::size_t>(j)]);
      qq.at(i, j) = s.q().at(reps[static_cast<std::size_t>(i)],
                             reps[static_cast<std::size_t>(j)]);
    }
  }
  std::vector<std::string> qlabels;
  qlabels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    qlabels.push_back(elem(reps[static_cast<std::size_t>(i)], labels).label);
  }
  InterlacedValidation v = validate_interlaced(qp, qq, &qlabels);
  if (!v.space) {
    throw invariant_error("quotient_interlaced: quotient failed validation");
  }
  const InterlacedClassification cls = classify_interlaced(*v.space, &qlabels);
  if (!cls.interlaced) {
    throw invariant_error("quotient_interlaced: quotient does not separate");
  }
  return QuotientResult{std::move(*v.space), std::move(proj),
                        std::move(qlabels)};
}

Report check_order_metric_compat(const InterlacedSpace& s,
                                 const std::vector<std::string>* labels) {
  Report rep;
  const int n = s.size();
  const Relation leq = order_pq(s);
  const PairMap d = intrinsic_dpq(s);
  const auto bad = first_bad_pair(n, [&](int x, int y) {
    if (!leq.get(x, y)) return true;
    return d.at(x, y) <= s.self(y) - s.self(x);
  });
  if (bad) {
    const auto [x, y] = *bad;
    rep.add_fail("comparable-pairs-bound",
                 make_witness({elem(x, labels), elem(y, labels)},
                              fr(d.at(x, y)), "<=", fr(s.self(y) - s.self(x)),
                              "intrinsic distance vs self-distance gap"));
  } else {
    rep.add_pass("comparable-pairs-bound");
  }
  return rep;
}

}  // namespace nisg
