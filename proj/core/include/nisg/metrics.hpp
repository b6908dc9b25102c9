#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nisg/pairmap.hpp"
#include "nisg/parallel.hpp"
#include "nisg/rational.hpp"
#include "nisg/report.hpp"
#include "nisg/semigroup.hpp"

namespace nisg {

// Symmetric submodular map with 0 <= p(x,x) <= p(x,y) everywhere.  Only
// validate_ppm constructs it.
class PartialPseudoMetric {
public:
  const PairMap& map() const { return p_; }
  int size() const { return p_.size(); }
  const Rational& at(int x, int y) const { return p_.at(x, y); }
  const Rational& self(int x) const { return p_.self(x); }

private:
  friend struct PpmValidation;
  explicit PartialPseudoMetric(PairMap p) : p_(std::move(p)) {}
  PairMap p_;
};

struct PpmValidation {
  std::optional<PartialPseudoMetric> ppm;
  Report report;

  static PpmValidation run(const PairMap& p,
                           const std::vector<std::string>* labels);
};

PpmValidation validate_ppm(const PairMap& p,
                           const std::vector<std::string>* labels = nullptr);

// Separation: p(x,x) = p(x,y) = p(y,y) forces x = y.
bool is_partial_metric(const PartialPseudoMetric& p);
std::optional<Pair> partial_metric_witness(const PartialPseudoMetric& p);

// Symmetric matrix with entries sqrt(radicand); zero diagonal.
class SqrtMatrix {
public:
  SqrtMatrix() = default;
  SqrtMatrix(int n, std::vector<Rational> radicands);
  int size() const { return n_; }
  const Rational& radicand(int x, int y) const {
    return r_[static_cast<std::size_t>(x) * n_ + y];
  }
  SqrtVal at(int x, int y) const { return SqrtVal{radicand(x, y)}; }

private:
  int n_ = 0;
  std::vector<Rational> r_;
};

// Pair (p, q) with p submodular, -q submodular, both symmetric, matching
// diagonals, and some k > 0 with w(x) + k q(x,y) <= k p(x,y) + w(y).
// Carries the least admissible k (clamped below at 1).
class InterlacedSpace {
public:
  const PairMap& p() const { return p_; }
  const PairMap& q() const { return q_; }
  const Rational& k_min() const { return k_min_; }
  int size() const { return p_.size(); }
  const Rational& self(int x) const { return p_.self(x); }

private:
  friend struct InterlacedValidation;
  InterlacedSpace(PairMap p, PairMap q, Rational k)
      : p_(std::move(p)), q_(std::move(q)), k_min_(std::move(k)) {}
  PairMap p_, q_;
  Rational k_min_;
};

struct InterlacedValidation {
  std::optional<InterlacedSpace> space;
  Report report;

  static InterlacedValidation run(const PairMap& p, const PairMap& q,
                                  const std::vector<std::string>* labels);
};

InterlacedValidation validate_interlaced(
    const PairMap& p, const PairMap& q,
    const std::vector<std::string>* labels = nullptr);

// d = p - q.  Asserts it is a pseudo-metric and that self-distances are
// k_min-Lipschitz with respect to it.
PairMap intrinsic_dpq(const InterlacedSpace& s);

// q0(x,y) = min(w(x), w(y)) and q1(x,y) = (w(x)+w(y))/2.  Each forms an
// interlaced space with p (asserted, with k = 2 admissible).
PairMap adjoint_q0(const PartialPseudoMetric& p);
PairMap adjoint_q1(const PartialPseudoMetric& p);

PairMap metric_d0(const PartialPseudoMetric& p);
PairMap metric_d1(const PartialPseudoMetric& p);
// d2(x,y) = sqrt(p(x,y)^2 - w(x) w(y)); triangle inequality asserted in
// squared form.
SqrtMatrix metric_d2(const PartialPseudoMetric& p);

// The exact product-form bound behind the d2 triangle inequality:
// 2*(p(x,z)-w(z))*(p(y,z)-w(z)) + (w(z)-w(x))*(w(y)-w(z))
//   <= 2*sqrt((p(x,z)^2-w(x)w(z)) * (p(y,z)^2-w(y)w(z))), plus the
// triangle inequality itself, over all triples.
Report check_d2_core_inequality(const PartialPseudoMetric& p,
                                const std::vector<std::string>* labels = nullptr);

// d0 <= 2 d1, d1 <= d0, d1 <= d2 and |w(x)-w(y)| <= d2, elementwise.
Report check_metric_chain(const PartialPseudoMetric& p,
                          const std::vector<std::string>* labels = nullptr);

// Along quasiorder chains x <= y <= z: p(x,y) = w(y) and d0, d1 add up
// exactly.
Report check_radial_convexity(const PartialPseudoMetric& p,
                              const std::vector<std::string>* labels = nullptr);

// If w(x)+w(y) <= p(x,y)+q(x,y) on all pairs then
// d1 <= (p-q) <= 2 d1 elementwise, where d1 = p - (w(x)+w(y))/2.
Report check_d1_envelope(const InterlacedSpace& s,
                         const std::vector<std::string>* labels = nullptr);

// x <= y iff w(x) <= q(x,y) and p(x,y) <= w(y).  Cross-checked against the
// two-quasiorder characterization; always a quasiorder.
Relation order_pq(const InterlacedSpace& s);

struct InterlacedClassification {
  bool interlaced = false;           // p(x,y) = q(x,y) only on the diagonal
  bool dpq_is_metric = false;        // p - q separates points
  bool leq_pq_antisymmetric = false;
  std::optional<Witness> witness;    // offending pair when flags are false
};

// The three flags are equivalent; agreement is asserted.
InterlacedClassification classify_interlaced(
    const InterlacedSpace& s, const std::vector<std::string>* labels = nullptr);

struct QuotientResult {
  InterlacedSpace space;
  std::vector<int> projection;  // point -> class index
  std::vector<std::string> labels;
};

// Collapses pairs at intrinsic distance zero.  Representative independence
// is verified, and the quotient must classify with all flags true.
QuotientResult quotient_interlaced(
    const InterlacedSpace& s, const std::vector<std::string>* labels = nullptr);

// On comparable pairs the intrinsic distance is at most the self-distance
// gap: x <= y implies (p-q)(x,y) <= w(y) - w(x).
Report check_order_metric_compat(const InterlacedSpace& s,
                                 const std::vector<std::string>* labels = nullptr);

}  // namespace nisg
