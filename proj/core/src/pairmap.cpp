#include "nisg/pairmap.hpp"

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

}  // namespace

PairMap::PairMap(int n, std::vector<Rational> values) : n_(n) {
  if (n < 1) throw input_error("pair map needs at least one point");
  if (values.size() != static_cast<std::size_t>(n) * n) {
    throw input_error("pair map value count does not match size");
  }
  v_ = std::move(values);
}

std::vector<Rational> self_distances(const PairMap& p) {
  std::vector<Rational> w;
  w.reserve(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) w.push_back(p.self(x));
  return w;
}

Report is_submodular(const PairMap& p,
                     const std::vector<std::string>* labels) {
  Report rep;
  const auto bad = first_bad_triple(p.size(), [&](int x, int y, int z) {
    return p.at(x, y) + p.self(z) <= p.at(x, z) + p.at(z, y);
  });
  if (bad) {
    const auto [x, y, z] = *bad;
    rep.add_fail(
        "submodularity",
        make_witness({elem(x, labels), elem(y, labels), elem(z, labels)},
                     format_rational(p.at(x, y) + p.self(z)), "<=",
                     format_rational(p.at(x, z) + p.at(z, y)),
                     "p(x,y)+p(z,z) vs p(x,z)+p(z,y)"));
  } else {
    rep.add_pass("submodularity");
  }
  return rep;
}

bool is_submodular_quiet(const PairMap& p) {
  return !first_bad_triple(p.size(), [&](int x, int y, int z) {
    return p.at(x, y) + p.self(z) <= p.at(x, z) + p.at(z, y);
  });
}

bool is_symmetric(const PairMap& p) { return !symmetry_witness(p); }

std::optional<Pair> symmetry_witness(const PairMap& p) {
  for (int x = 0; x < p.size(); ++x) {
    for (int y = x + 1; y < p.size(); ++y) {
      if (p.at(x, y) != p.at(y, x)) return Pair{x, y};
    }
  }
  return std::nullopt;
}

bool symmetry_criterion(const PairMap& p) {
  const bool criterion = !first_bad_triple(p.size(), [&](int x, int y, int z) {
    return p.at(x, y) + p.self(z) <= p.at(x, z) + p.at(y, z);
  });
  if (is_submodular_quiet(p) && criterion != is_symmetric(p)) {
    throw invariant_error(
        "symmetry_criterion: disagrees with symmetry on a submodular map");
  }
  return criterion;
}

Relation quasiorder_leq_p(const PairMap& p) {
  const int n = p.size();
  Relation leq(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool le = p.self(x) <= p.self(y);
      for (int z = 0; z < n && le; ++z) le = p.at(x, z) <= p.at(y, z);
      leq.set(x, y, le);
    }
  }
  if (!leq.is_quasiorder()) {
    throw invariant_error("quasiorder_leq_p: result is not a quasiorder");
  }
  if (is_submodular_quiet(p)) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const bool one_pair =
            rat_max(p.self(x), p.at(x, y)) <= p.self(y);
        if (one_pair != leq.get(x, y)) {
          throw invariant_error(
              "quasiorder_leq_p: one-pair characterization disagrees at (" +
              std::to_string(x) + ", " + std::to_string(y) + ")");
        }
      }
    }
  }
  return leq;
}

PairMap transform_max(const PairMap& p) {
  if (!is_submodular_quiet(p)) {
    throw input_error("transform_max: input is not submodular");
  }
  const int n = p.size();
  PairMap q(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      q.at(x, y) = rat_max(p.self(x), p.at(x, y));
    }
  }
  if (!is_submodular_quiet(q)) {
    throw invariant_error("transform_max: output not submodular");
  }
  for (int x = 0; x < n; ++x) {
    if (q.self(x) != p.self(x)) {
      throw invariant_error("transform_max: self-distances changed");
    }
  }
  if (!(quasiorder_leq_p(q) == quasiorder_leq_p(p))) {
    throw invariant_error("transform_max: quasiorder changed");
  }
  return q;
}

PairMap transform_shift(const PairMap& p, const std::vector<Rational>& f,
                        ShiftSide side) {
  if (f.size() != static_cast<std::size_t>(p.size())) {
    throw input_error("transform_shift: shift vector has wrong length");
  }
  if (!is_submodular_quiet(p)) {
    throw input_error("transform_shift: input is not submodular");
  }
  const int n = p.size();
  PairMap q(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      q.at(x, y) = side == ShiftSide::Left
                       ? f[static_cast<std::size_t>(x)] + p.at(x, y)
                       : p.at(x, y) + f[static_cast<std::size_t>(y)];
    }
  }
  if (!is_submodular_quiet(q)) {
    throw invariant_error("transform_shift: output not submodular");
  }
  return q;
}

ConcavePL::ConcavePL(std::vector<Piece> pieces, std::optional<Rational> lo,
                     std::optional<Rational> hi)
    : pieces_(std::move(pieces)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (pieces_.empty()) throw input_error("ConcavePL: no pieces");
  for (const Piece& piece : pieces_) {
    if (piece.slope < 0) {
      throw input_error("ConcavePL: negative slope breaks monotonicity");
    }
  }
  if (lo_ && hi_ && *hi_ < *lo_) throw input_error("ConcavePL: empty interval");
}

bool ConcavePL::contains(const Rational& t) const {
  if (lo_ && t < *lo_) return false;
  if (hi_ && *hi_ < t) return false;
  return true;
}

Rational ConcavePL::operator()(const Rational& t) const {
  if (!contains(t)) {
    throw input_error("ConcavePL: argument " + format_rational(t) +
                      " outside domain");
  }
  Rational best = pieces_[0].slope * t + pieces_[0].intercept;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    Rational v = pieces_[i].slope * t + pieces_[i].intercept;
    if (v < best) best = std::move(v);
  }
  return best;
}

namespace {

// max(p(x,x), p(y,y)) <= p(x,y) on all pairs.
std::optional<Pair> dominated_diagonal_witness(const PairMap& p) {
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (rat_max(p.self(x), p.self(y)) > p.at(x, y)) return Pair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

PairMap transform_concave(const PairMap& p, const ConcavePL& f) {
  if (!is_submodular_quiet(p)) {
    throw input_error("transform_concave: input is not submodular");
  }
  if (const auto bad = dominated_diagonal_witness(p)) {
    throw input_error("transform_concave: diagonal not dominated at (" +
                      std::to_string(bad->x) + ", " + std::to_string(bad->y) +
                      ")");
  }
  const int n = p.size();
  PairMap q(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      q.at(x, y) = f(p.at(x, y));
    }
  }
  if (!is_submodular_quiet(q)) {
    throw invariant_error("transform_concave: output not submodular");
  }
  return q;
}

PairMap transform_kunzi(const PairMap& p, const Rational& b) {
  if (b <= 0) throw input_error("transform_kunzi: b must be positive");
  if (!is_submodular_quiet(p)) {
    throw input_error("transform_kunzi: input is not submodular");
  }
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Rational& diag = rat_max(p.self(x), p.self(y));
      if (diag < -b || p.at(x, y) < diag || b + p.at(x, y) <= 0) {
        throw input_error("transform_kunzi: precondition fails at (" +
                          std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
  PairMap q(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      q.at(x, y) = p.at(x, y) / (b + p.at(x, y));
    }
  }
  if (!is_submodular_quiet(q)) {
    throw invariant_error("transform_kunzi: output not submodular");
  }
  return q;
}

PairMap topkis_pairmap(const std::vector<std::vector<Rational>>& points,
                       int alpha) {
  if (points.empty()) throw input_error("topkis_pairmap: no points");
  if (alpha < 1) throw input_error("topkis_pairmap: alpha must be >= 1");
  const std::size_t dim = points[0].size();
  for (const auto& pt : points) {
    if (pt.size() != dim) {
      throw input_error("topkis_pairmap: inconsistent dimensions");
    }
    for (const Rational& c : pt) {
      if (c < 0) throw input_error("topkis_pairmap: negative coordinate");
    }
  }
  const int n = static_cast<int>(points.size());
  PairMap p(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Rational sum(0);
      for (std::size_t i = 0; i < dim; ++i) {
        const Rational& m = rat_max(points[static_cast<std::size_t>(x)][i],
                                    points[static_cast<std::size_t>(y)][i]);
        Rational pow = m;
        for (int a = 1; a < alpha; ++a) pow *= m;
        sum += pow;
      }
      p.at(x, y) = std::move(sum);
    }
  }
  if (!is_submodular_quiet(p)) {
    throw invariant_error("topkis_pairmap: output not submodular");
  }
  return p;
}

ValuationPairmapResult valuation_pairmap(const Relation& order,
                                         const std::vector<Rational>& w) {
  const int n = order.size();
  if (n < 1) throw input_error("valuation_pairmap: empty carrier");
  if (w.size() != static_cast<std::size_t>(n)) {
    throw input_error("valuation_pairmap: weight count does not match");
  }
  if (!order.is_quasiorder()) {
    throw input_error("valuation_pairmap: relation is not a quasiorder");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (order.get(x, y) &&
          w[static_cast<std::size_t>(x)] > w[static_cast<std::size_t>(y)]) {
        throw input_error("valuation_pairmap: weights not order-preserving at (" +
                          std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
  const auto min_over_bounds = [n](const Relation& leq, int x, int y,
                                   auto&& weight) -> std::optional<Rational> {
    std::optional<Rational> best;
    for (int z = 0; z < n; ++z) {
      if (!leq.get(x, z) || !leq.get(y, z)) continue;
      Rational v = weight(z);
      if (!best || v < *best) best = std::move(v);
    }
    return best;
  };

  ValuationPairmapResult out{PairMap(n), true};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto v = min_over_bounds(order, x, y, [&](int z) {
        return w[static_cast<std::size_t>(z)];
      });
      if (!v) {
        throw input_error("valuation_pairmap: no upper bound for (" +
                          std::to_string(x) + ", " + std::to_string(y) + ")");
      }
      out.p.at(x, y) = *v;
    }
  }
  if (!is_symmetric(out.p)) {
    throw invariant_error("valuation_pairmap: result not symmetric");
  }
  // Stability: the quasiorder of p supports the same construction.
  const Relation leq_p = quasiorder_leq_p(out.p);
  for (int x = 0; x < n && out.stable; ++x) {
    for (int y = 0; y < n && out.stable; ++y) {
      const auto v = min_over_bounds(leq_p, x, y,
                                     [&](int z) { return out.p.self(z); });
      out.stable = v && *v == out.p.at(x, y);
    }
  }
  return out;
}

}  // namespace nisg
