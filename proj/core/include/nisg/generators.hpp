#pragma once

#include "nisg/semigroup.hpp"

namespace nisg {

// Every generator validates its own output table before returning; a
// validation failure there is an implementation bug, not bad input.

FiniteInverseSemigroup make_trivial();
// Integers mod n under addition.
FiniteInverseSemigroup make_cyclic_group(int n);
// {0..n-1} under max; the identity is 0.
FiniteInverseSemigroup make_chain_semilattice(int n);
// Subsets of {0..ground-1} under union, indexed by bitmask.
FiniteInverseSemigroup make_powerset_semilattice(int ground);
// Partial bijections of {0..k-1} under left-to-right composition.
// Element count is sum over i of C(k,i)^2 * i!, asserted after enumeration.
FiniteInverseSemigroup make_symmetric_inverse_monoid(int k);
FiniteInverseSemigroup make_direct_product(const FiniteInverseSemigroup& a,
                                           const FiniteInverseSemigroup& b);

}  // namespace nisg
