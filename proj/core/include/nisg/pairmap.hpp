#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nisg/parallel.hpp"
#include "nisg/rational.hpp"
#include "nisg/report.hpp"
#include "nisg/semigroup.hpp"

namespace nisg {

// Finite rational-valued map on pairs of {0..n-1}.  Values are always
// finite; formats with infinities are rejected at the I/O layer.
class PairMap {
public:
  PairMap() = default;
  explicit PairMap(int n)
      : n_(n), v_(static_cast<std::size_t>(n) * n, Rational(0)) {}
  PairMap(int n, std::vector<Rational> values);

  int size() const { return n_; }
  const Rational& at(int x, int y) const { return v_[idx(x, y)]; }
  Rational& at(int x, int y) { return v_[idx(x, y)]; }
  // Self-distance p(x,x).
  const Rational& self(int x) const { return v_[idx(x, x)]; }

  bool operator==(const PairMap& other) const {
    return n_ == other.n_ && v_ == other.v_;
  }

private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }
  int n_ = 0;
  std::vector<Rational> v_;
};

std::vector<Rational> self_distances(const PairMap& p);

// p(x,y) + p(z,z) <= p(x,z) + p(z,y) on all triples.
Report is_submodular(const PairMap& p,
                     const std::vector<std::string>* labels = nullptr);
bool is_submodular_quiet(const PairMap& p);

bool is_symmetric(const PairMap& p);
std::optional<Pair> symmetry_witness(const PairMap& p);
// p(x,y) + p(z,z) <= p(x,z) + p(y,z) on all triples.  For submodular maps
// this is equivalent to symmetry; the agreement is asserted in that case.
bool symmetry_criterion(const PairMap& p);

// x <= y iff p(x,x) <= p(y,y) and p(x,z) <= p(y,z) for every z.  Always a
// quasiorder.  For submodular maps the one-pair characterization
// max(p(x,x), p(x,y)) <= p(y,y) is asserted to agree.
Relation quasiorder_leq_p(const PairMap& p);

// q(x,y) = max(p(x,x), p(x,y)).  Keeps self-distances and the quasiorder;
// both are asserted.
PairMap transform_max(const PairMap& p);

enum class ShiftSide { Left, Right };
// Left: q(x,y) = f(x) + p(x,y).  Right: q(x,y) = p(x,y) + f(y).
PairMap transform_shift(const PairMap& p, const std::vector<Rational>& f,
                        ShiftSide side);

// Minimum of finitely many nondecreasing affine pieces, restricted to an
// interval: concave and order-preserving by construction.
class ConcavePL {
public:
  struct Piece {
    Rational slope;  // >= 0
    Rational intercept;
  };
  ConcavePL(std::vector<Piece> pieces, std::optional<Rational> lo,
            std::optional<Rational> hi);
  Rational operator()(const Rational& t) const;
  bool contains(const Rational& t) const;

private:
  std::vector<Piece> pieces_;
  std::optional<Rational> lo_, hi_;
};

// Composition f(p(x,y)).  Requires p submodular with dominated diagonal
// (max(p(x,x), p(y,y)) <= p(x,y) on all pairs) and range inside f's
// interval.  The result is submodular; asserted.
PairMap transform_concave(const PairMap& p, const ConcavePL& f);

// q = p / (b + p) for b > 0.  Requires -b <= max(p(x,x), p(y,y)) <= p(x,y)
// and b + p(x,y) > 0 on every pair.  The result is submodular; asserted.
PairMap transform_kunzi(const PairMap& p, const Rational& b);

// p(x,y) = sum_i max(x_i, y_i)^alpha over points with nonnegative rational
// coordinates.  Submodular for integer alpha >= 1; asserted.
PairMap topkis_pairmap(const std::vector<std::vector<Rational>>& points,
                       int alpha);

struct ValuationPairmapResult {
  // p(x,y) = min{ w(z) : x <= z and y <= z }.
  PairMap p;
  // Recomputing p from its own quasiorder and self-distances reproduces it.
  bool stable = false;
};
// Requires a finite quasiorder in which every pair has an upper bound and
// an order-preserving weight vector.
ValuationPairmapResult valuation_pairmap(const Relation& order,
                                         const std::vector<Rational>& w);

}  // namespace nisg
