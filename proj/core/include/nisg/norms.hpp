#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nisg/metrics.hpp"
#include "nisg/pairmap.hpp"
#include "nisg/rational.hpp"
#include "nisg/report.hpp"
#include "nisg/semigroup.hpp"

namespace nisg {

// Nonnegative rational value per element.
using Valuation = std::vector<Rational>;

// p(x,y) = v[x + y*].
PairMap induced_p(const FiniteInverseSemigroup& S, const Valuation& v);
// p*(x,y) = v[x* + y]; equals p(x*, y*), asserted.
PairMap induced_p_star(const FiniteInverseSemigroup& S, const Valuation& v);

// Axioms: v[x+y*] = v[y+x*]; v[x+x*] <= v[x+y*];
// v[x+y*] + v[z+z*] <= v[x+z*] + v[z+y*]; on monoids also v[identity] = 0.
// When they all hold, the induced map must validate as a partial
// pseudo-metric; that is reported under "induced.*".
Report validate_pseudonorm(const FiniteInverseSemigroup& S, const Valuation& v);

struct Permutability {
  bool weak = false;    // v[e+x] = v[x+e] for idempotent e
  bool cyclic = false;  // v[x+y] = v[y+x]
};
// cyclic implies weak, and Clifford structures are weak; both asserted.
Permutability permutability(const FiniteInverseSemigroup& S,
                            const Valuation& v);

// The structural consequences of the pseudo-norm axioms: order
// compatibility, monotonicity, star invariance, delta bounds, defect
// monotonicity, plus monoid subadditivity and the homogeneous special case.
Report verify_norm_properties(const FiniteInverseSemigroup& S,
                              const Valuation& v);

struct RestrictedNorm {
  LocalMonoid local;
  Valuation v;  // v[x] - v[e] on the local monoid, each >= 0
};
// Throws input_error if e is not idempotent or if some shifted value is
// negative (which means v was not a pseudo-norm).
RestrictedNorm restricted_norm(const FiniteInverseSemigroup& S,
                               const Valuation& v, int e);

// Separation: v[x] = v[e] with x in the local monoid of e forces x = e.
bool is_norm(const FiniteInverseSemigroup& S, const Valuation& v);
std::optional<Witness> norm_separation_witness(const FiniteInverseSemigroup& S,
                                               const Valuation& v);

struct NormClassification {
  bool is_pseudonorm = false;
  bool weakly_permutable = false;
  bool cyclically_permutable = false;
  bool is_norm = false;
  bool d1_is_metric = false;
  bool p_is_partial_metric = false;
  bool leq_p_antisymmetric = false;
  bool leq_p_equals_leq_s = false;
  // Witness per false flag, keyed by flag name.
  std::vector<std::pair<std::string, Witness>> witnesses;
};

// For weakly permutable pseudo-norms the last five flags are equivalent;
// their pairwise agreement is asserted, and when they hold the quasiorders
// of p and p* are asserted to coincide.
NormClassification classify(const FiniteInverseSemigroup& S,
                            const Valuation& v);

struct InducedMetrics {
  PairMap p;
  PairMap d0;  // p(x,y) - min(v[dx], v[dy])
  PairMap d1;  // p(x,y) - (v[dx] + v[dy])/2
  SqrtMatrix d2;  // sqrt(p(x,y)^2 - v[dx] v[dy])
};
// Requires a valid pseudo-norm.
InducedMetrics induced_metrics(const FiniteInverseSemigroup& S,
                               const Valuation& v);

// Right-subinvariance and radial convexity of d0/d1, the local-monoid
// distance identity, delta-distance collapse on pairs with a common lower
// bound, plus the operation-compatibility bound for cyclically permutable
// instances and the delta-norm envelope for weakly permutable ones.
Report check_subinvariance_and_convexity(const FiniteInverseSemigroup& S,
                                         const Valuation& v);

}  // namespace nisg
