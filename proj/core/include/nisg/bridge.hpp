#pragma once

#include <cstdint>
#include <optional>

#include "nisg/norms.hpp"

namespace nisg {

// Pseudo-metric axioms plus the two skew conditions on a semigroup with
// commuting deltas: d(x,y) >= d(dx,dy) everywhere, and
// d(x,z) = d(dx,dy) + d(x+y*, z+y*) whenever dx <= dy <= dz.  Radial
// convexity along the natural order is re-derived and must agree.
// Throws input_error if deltas do not commute or sizes mismatch.
Report is_skew_convex(const FiniteInverseSemigroup& S, const PairMap& d);

// For a pseudo-norm with commuting deltas, d0 and d1 are right-subinvariant
// and skew-convex; checked exhaustively, reported under "d0.*" and "d1.*".
Report verify_dclifford(const FiniteInverseSemigroup& S, const Valuation& v);

struct MetricToNorm {
  std::optional<Valuation> v;
  Report report;
};

// v(x) = d(x, 0) + d(dx, 0).  Requires a monoid with commuting deltas
// (input_error otherwise).  When d fails the pseudo-metric, subinvariance
// or skew conditions, the report carries the witness and v stays empty.
// Otherwise v validates as a pseudo-norm, the helper map
// d'(x,y) = d(x,y) + d(dx,dy) satisfies d <= d' <= 2d with v(x) = d'(x,0),
// and v separates exactly when d does.
MetricToNorm norm_from_metric(const FiniteInverseSemigroup& S,
                              const PairMap& d);

// Norm -> d1 -> norm reproduces the valuation exactly, via
// d1(x,0) = v[x] - v[dx]/2 and d1(dx,0) = v[dx]/2.
Report roundtrip_check(const FiniteInverseSemigroup& S, const Valuation& v);

// Two-point family p = [[1, l], [l, l]] with l = (k+1)/k for k = 2..k_max:
// d2(x,y)^2 = l(l-1) = (k+1) d0(x,y)^2 > k d0(x,y)^2, so no single factor
// sqrt(k) dominates d2 by d0.  Small k instances are cross-checked against
// the full validation stack.
Report reproduce_counter_family(std::uint64_t k_max);

}  // namespace nisg
