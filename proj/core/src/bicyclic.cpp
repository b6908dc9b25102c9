#include "nisg/bicyclic.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "nisg/errors.hpp"

namespace nisg {
namespace {

using Elem = BicyclicMonoid::Elem;

constexpr std::int64_t kMaxCoordBound = std::int64_t{1} << 40;

// Modulo draws keep the sequence identical across platforms; the slight
// bias is irrelevant for counterexample search.
std::int64_t draw_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

GroupVec draw_vec(std::mt19937_64& rng, int dim, std::int64_t lo,
                  std::int64_t hi) {
  GroupVec g(static_cast<std::size_t>(dim));
  for (auto& c : g) c = draw_in(rng, lo, hi);
  return g;
}

GroupVec vec_add(const GroupVec& g, const GroupVec& h) {
  GroupVec out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] + h[i];
  return out;
}

GroupVec vec_neg(const GroupVec& g) {
  GroupVec out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = -g[i];
  return out;
}

std::string vec_label(const GroupVec& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(g[i]);
  }
  return out;
}

}  // namespace

BicyclicMonoid::BicyclicMonoid(int dim, GroupNorm norm)
    : dim_(dim), norm_(norm) {
  if (dim < 1 || dim > 64) {
    throw input_error("bicyclic dimension must be between 1 and 64");
  }
}

void BicyclicMonoid::check(const Elem& x) const {
  if (static_cast<int>(x.a.size()) != dim_ ||
      static_cast<int>(x.b.size()) != dim_) {
    throw input_error("element dimension mismatch");
  }
  for (int i = 0; i < dim_; ++i) {
    if (x.a[static_cast<std::size_t>(i)] < 0 ||
        x.b[static_cast<std::size_t>(i)] < 0) {
      throw input_error("element has a negative coordinate");
    }
  }
}

Elem BicyclicMonoid::add(const Elem& x, const Elem& y) const {
  check(x);
  check(y);
  Elem out;
  out.a.resize(static_cast<std::size_t>(dim_));
  out.b.resize(static_cast<std::size_t>(dim_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(dim_); ++i) {
    const std::int64_t join = std::max(x.b[i], y.a[i]);
    out.a[i] = x.a[i] - x.b[i] + join;
    out.b[i] = y.b[i] - y.a[i] + join;
  }
  return out;
}

Elem BicyclicMonoid::star(const Elem& x) const {
  check(x);
  return {x.b, x.a};
}

Elem BicyclicMonoid::identity() const {
  return {GroupVec(static_cast<std::size_t>(dim_), 0),
          GroupVec(static_cast<std::size_t>(dim_), 0)};
}

Elem BicyclicMonoid::delta(const Elem& x) const {
  check(x);
  return {x.a, x.a};
}

bool BicyclicMonoid::is_idempotent(const Elem& x) const {
  return add(x, x) == x;
}

bool BicyclicMonoid::leq_natural(const Elem& x, const Elem& y) const {
  check(x);
  check(y);
  for (std::size_t i = 0; i < static_cast<std::size_t>(dim_); ++i) {
    const std::int64_t gap = y.a[i] - x.a[i];
    if (gap < 0 || gap != y.b[i] - x.b[i]) return false;
  }
  return true;
}

Elem BicyclicMonoid::embed(const GroupVec& g) const {
  if (static_cast<int>(g.size()) != dim_) {
    throw input_error("vector dimension mismatch");
  }
  Elem out;
  out.a.resize(g.size());
  out.b.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.a[i] = std::max<std::int64_t>(g[i], 0);
    out.b[i] = std::max<std::int64_t>(-g[i], 0);
  }
  return out;
}

Rational BicyclicMonoid::group_norm(const GroupVec& g) const {
  if (static_cast<int>(g.size()) != dim_) {
    throw input_error("vector dimension mismatch");
  }
  std::int64_t value = 0;
  for (const std::int64_t c : g) {
    const std::int64_t a = c < 0 ? -c : c;
    value = norm_ == GroupNorm::L1 ? value + a : std::max(value, a);
  }
  return Rational(static_cast<long>(value));
}

Rational BicyclicMonoid::norm(const Elem& x) const {
  check(x);
  GroupVec diff(static_cast<std::size_t>(dim_));
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = x.a[i] - x.b[i];
  return group_norm(diff);
}

std::string BicyclicMonoid::label(const Elem& x) const {
  return "(" + vec_label(x.a) + "|" + vec_label(x.b) + ")";
}

namespace {

struct Sampled {
  Assertion assertion;

  explicit Sampled(const char* name) { assertion.name = name; }

  template <class BuildWitness>
  void expect(bool ok, BuildWitness&& build) {
    if (!ok && assertion.pass) {
      assertion.pass = false;
      assertion.witness = build();
    }
  }
};

Witness elem_witness(const BicyclicMonoid& M, std::vector<Elem> xs,
                     std::string lhs, std::string rel, std::string rhs,
                     std::string note) {
  std::vector<WitnessElement> elements;
  elements.reserve(xs.size());
  for (const Elem& x : xs) elements.push_back({-1, M.label(x)});
  return make_witness(std::move(elements), std::move(lhs), std::move(rel),
                      std::move(rhs), std::move(note));
}

void check_sampling_args(std::uint64_t samples, std::int64_t coord_bound) {
  if (coord_bound < 0 || coord_bound > kMaxCoordBound) {
    throw input_error("coordinate bound out of range");
  }
  if (samples > 100'000'000) throw input_error("sample count out of range");
}

}  // namespace

Report verify_bicyclic_identities(const BicyclicMonoid& M, std::uint64_t seed,
                                  std::uint64_t samples,
                                  std::int64_t coord_bound) {
  check_sampling_args(samples, coord_bound);
  std::mt19937_64 rng(seed);
  const int k = M.dim();

  Sampled assoc("associativity");
  Sampled ident("identity-element");
  Sampled invlaw("inverse-laws");
  Sampled invol("star-involution");
  Sampled antidist("star-antidistribution");
  Sampled idem_shape("idempotent-iff-diagonal");
  Sampled delta_form("delta-diagonal");
  Sampled order_def("natural-order-arithmetic");
  Sampled order_star("order-star-compatible");
  Sampled idem_order("idempotent-order");
  Sampled embed_id("embed-identity");
  Sampled embed_star("embed-star");
  Sampled embed_sub("embed-subadditive");

  const Elem zero = M.identity();
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Elem x{draw_vec(rng, k, 0, coord_bound),
                 draw_vec(rng, k, 0, coord_bound)};
    const Elem y{draw_vec(rng, k, 0, coord_bound),
                 draw_vec(rng, k, 0, coord_bound)};
    const Elem z{draw_vec(rng, k, 0, coord_bound),
                 draw_vec(rng, k, 0, coord_bound)};
    const GroupVec c = draw_vec(rng, k, 0, coord_bound);
    const GroupVec d = draw_vec(rng, k, 0, coord_bound);
    const GroupVec g = draw_vec(rng, k, -coord_bound, coord_bound);
    const GroupVec h = draw_vec(rng, k, -coord_bound, coord_bound);

    assoc.expect(M.add(M.add(x, y), z) == M.add(x, M.add(y, z)), [&] {
      return elem_witness(M, {x, y, z}, M.label(M.add(M.add(x, y), z)), "==",
                          M.label(M.add(x, M.add(y, z))),
                          "(x+y)+z vs x+(y+z)");
    });
    ident.expect(M.add(x, zero) == x && M.add(zero, x) == x, [&] {
      return elem_witness(M, {x}, M.label(M.add(x, zero)), "==", M.label(x),
                          "absorption of the identity failed");
    });
    invlaw.expect(M.add(M.add(x, M.star(x)), x) == x &&
                      M.add(M.add(M.star(x), x), M.star(x)) == M.star(x),
                  [&] {
                    return elem_witness(M, {x}, M.label(M.add(M.add(x, M.star(x)), x)),
                                        "==", M.label(x), "x+x*+x vs x");
                  });
    invol.expect(M.star(M.star(x)) == x, [&] {
      return elem_witness(M, {x}, M.label(M.star(M.star(x))), "==",
                          M.label(x), "(x*)* vs x");
    });
    antidist.expect(
        M.star(M.add(x, y)) == M.add(M.star(y), M.star(x)), [&] {
          return elem_witness(M, {x, y}, M.label(M.star(M.add(x, y))), "==",
                              M.label(M.add(M.star(y), M.star(x))),
                              "(x+y)* vs y*+x*");
        });
    idem_shape.expect(M.is_idempotent(x) == (x.a == x.b), [&] {
      return elem_witness(M, {x}, M.is_idempotent(x) ? "x+x = x" : "x+x != x",
                          "iff", x.a == x.b ? "a = b" : "a != b",
                          "idempotents are exactly the diagonal pairs");
    });
    delta_form.expect(
        M.add(x, M.star(x)) == Elem{x.a, x.a} &&
            M.is_idempotent(M.delta(x)),
        [&] {
          return elem_witness(M, {x}, M.label(M.add(x, M.star(x))), "==",
                              M.label(Elem{x.a, x.a}), "x+x* vs (a|a)");
        });

    // A pair made comparable by construction plus a random pair.
    const Elem up = M.add(x, Elem{c, c});
    order_def.expect(
        M.leq_natural(x, up) &&
            M.leq_natural(x, y) == (M.add(x, Elem{y.b, y.b}) == y),
        [&] {
          return elem_witness(M, {x, y, up}, "0 <= c-a = d-b", "iff",
                              "y = x + (d|d)",
                              "arithmetic order vs the defining equation");
        });
    order_star.expect(
        M.leq_natural(x, up) == M.leq_natural(M.star(x), M.star(up)) &&
            M.leq_natural(x, y) == M.leq_natural(M.star(x), M.star(y)),
        [&] {
          return elem_witness(M, {x, y}, "x <= y", "iff", "x* <= y*",
                              "order must be star-compatible");
        });
    {
      bool coordwise = true;
      for (int t = 0; t < k; ++t) {
        if (c[static_cast<std::size_t>(t)] > d[static_cast<std::size_t>(t)]) {
          coordwise = false;
          break;
        }
      }
      idem_order.expect(
          M.leq_natural(Elem{c, c}, Elem{d, d}) == coordwise, [&] {
            return elem_witness(M, {Elem{c, c}, Elem{d, d}}, "(c|c) <= (d|d)",
                                "iff", "c <= d componentwise",
                                "idempotent order is the coordinate order");
          });
    }
    embed_id.expect(M.embed(GroupVec(static_cast<std::size_t>(k), 0)) == zero,
                    [&] {
                      return elem_witness(M, {zero}, "embed(0)", "==",
                                          M.label(zero), "");
                    });
    embed_star.expect(M.embed(vec_neg(g)) == M.star(M.embed(g)), [&] {
      return elem_witness(M, {M.embed(g)}, M.label(M.embed(vec_neg(g))),
                          "==", M.label(M.star(M.embed(g))),
                          "embed(-g) vs embed(g)*");
    });
    embed_sub.expect(
        M.leq_natural(M.embed(vec_add(g, h)),
                      M.add(M.embed(g), M.embed(h))),
        [&] {
          return elem_witness(M, {M.embed(g), M.embed(h)},
                              M.label(M.embed(vec_add(g, h))), "<=",
                              M.label(M.add(M.embed(g), M.embed(h))),
                              "embed(g+h) vs embed(g) + embed(h)");
        });
  }

  Report r;
  r.exhaustive = false;
  r.seed = seed;
  r.samples = samples;
  for (Sampled* s : {&assoc, &ident, &invlaw, &invol, &antidist, &idem_shape,
                     &delta_form, &order_def, &order_star, &idem_order,
                     &embed_id, &embed_star, &embed_sub}) {
    r.add(std::move(s->assertion));
  }
  return r;
}

Report verify_bicyclic_pseudonorm(const BicyclicMonoid& M, std::uint64_t seed,
                                  std::uint64_t samples,
                                  std::int64_t coord_bound) {
  check_sampling_args(samples, coord_bound);
  std::mt19937_64 rng(seed);
  const int k = M.dim();

  Sampled star_inv("star-invariant");
  Sampled idem_zero("idempotent-norm-zero");
  Sampled sym("symmetry");
  Sampled self_bound("self-bound");
  Sampled submod("submodularity");
  Sampled id_zero("identity-norm-zero");
  Sampled sum_formula("sum-norm-formula");
  Sampled subadd("subadditive");
  Sampled cyclic("cyclic-permutable");
  Sampled embed_norm("embed-norm-preserving");

  const auto p = [&](const Elem& x, const Elem& y) {
    return M.norm(M.add(x, M.star(y)));
  };

  for (std::uint64_t i = 0; i < samples; ++i) {
    const Elem x{draw_vec(rng, k, 0, coord_bound),
                 draw_vec(rng, k, 0, coord_bound)};
    const Elem y{draw_vec(rng, k, 0, coord_bound),
                 draw_vec(rng, k, 0, coord_bound)};
    const Elem z{draw_vec(rng, k, 0, coord_bound),
                 draw_vec(rng, k, 0, coord_bound)};
    const GroupVec g = draw_vec(rng, k, -coord_bound, coord_bound);

    star_inv.expect(M.norm(M.star(x)) == M.norm(x), [&] {
      return elem_witness(M, {x}, format_rational(M.norm(M.star(x))), "==",
                          format_rational(M.norm(x)), "v[x*] vs v[x]");
    });
    idem_zero.expect(M.norm(M.delta(x)) == 0, [&] {
      return elem_witness(M, {M.delta(x)},
                          format_rational(M.norm(M.delta(x))), "==", "0",
                          "idempotents have norm zero");
    });
    sym.expect(p(x, y) == p(y, x), [&] {
      return elem_witness(M, {x, y}, format_rational(p(x, y)), "==",
                          format_rational(p(y, x)), "v[x+y*] vs v[y+x*]");
    });
    self_bound.expect(p(x, x) <= p(x, y), [&] {
      return elem_witness(M, {x, y}, format_rational(p(x, x)), "<=",
                          format_rational(p(x, y)), "v[x+x*] vs v[x+y*]");
    });
    submod.expect(p(x, y) + p(z, z) <= p(x, z) + p(z, y), [&] {
      const Rational lhs = p(x, y) + p(z, z);
      const Rational rhs = p(x, z) + p(z, y);
      return elem_witness(M, {x, y, z}, format_rational(lhs), "<=",
                          format_rational(rhs),
                          "v[x+y*] + v[z+z*] vs v[x+z*] + v[z+y*]");
    });
    id_zero.expect(M.norm(M.identity()) == 0, [&] {
      return elem_witness(M, {M.identity()},
                          format_rational(M.norm(M.identity())), "==", "0",
                          "");
    });
    {
      GroupVec diff(static_cast<std::size_t>(k));
      for (std::size_t t = 0; t < diff.size(); ++t) {
        diff[t] = (x.a[t] - x.b[t]) + (y.a[t] - y.b[t]);
      }
      sum_formula.expect(M.norm(M.add(x, y)) == M.group_norm(diff), [&] {
        return elem_witness(M, {x, y}, format_rational(M.norm(M.add(x, y))),
                            "==", format_rational(M.group_norm(diff)),
                            "v[x+y] vs |(a-b) + (c-d)|");
      });
    }
    subadd.expect(M.norm(M.add(x, y)) <= M.norm(x) + M.norm(y), [&] {
      const Rational rhs = M.norm(x) + M.norm(y);
      return elem_witness(M, {x, y}, format_rational(M.norm(M.add(x, y))),
                          "<=", format_rational(rhs), "v[x+y] vs v[x]+v[y]");
    });
    cyclic.expect(M.norm(M.add(x, y)) == M.norm(M.add(y, x)), [&] {
      return elem_witness(M, {x, y}, format_rational(M.norm(M.add(x, y))),
                          "==", format_rational(M.norm(M.add(y, x))),
                          "v[x+y] vs v[y+x]");
    });
    embed_norm.expect(M.norm(M.embed(g)) == M.group_norm(g), [&] {
      return elem_witness(M, {M.embed(g)},
                          format_rational(M.norm(M.embed(g))), "==",
                          format_rational(M.group_norm(g)),
                          "v[embed(g)] vs |g|");
    });
  }

  Report r;
  r.exhaustive = false;
  r.seed = seed;
  r.samples = samples;
  for (Sampled* s : {&star_inv, &idem_zero, &sym, &self_bound, &submod,
                     &id_zero, &sum_formula, &subadd, &cyclic, &embed_norm}) {
    r.add(std::move(s->assertion));
  }
  return r;
}

}  // namespace nisg
