#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nisg/rational.hpp"
#include "nisg/report.hpp"

namespace nisg {

using GroupVec = std::vector<std::int64_t>;

enum class GroupNorm { L1, LInf };

// Inverse monoid on pairs of nonnegative integer vectors with
// (a,b) + (c,d) = (a - b + max(b,c), d - c + max(b,c)) componentwise,
// star (a,b) -> (b,a), identity (0,0).  The norm of (a,b) is the chosen
// group norm of a - b.  Infinite carrier, so verification is sampled.
class BicyclicMonoid {
public:
  struct Elem {
    GroupVec a, b;
    bool operator==(const Elem& other) const = default;
  };

  BicyclicMonoid(int dim, GroupNorm norm);

  int dim() const { return dim_; }
  GroupNorm norm_kind() const { return norm_; }

  Elem add(const Elem& x, const Elem& y) const;
  Elem star(const Elem& x) const;
  Elem identity() const;
  Elem delta(const Elem& x) const;
  bool is_idempotent(const Elem& x) const;

  // 0 <= c - a = d - b componentwise, for x = (a,b) and y = (c,d).
  bool leq_natural(const Elem& x, const Elem& y) const;

  // g -> (max(g,0), max(-g,0)); norm-preserving and star-compatible.
  Elem embed(const GroupVec& g) const;

  Rational norm(const Elem& x) const;
  Rational group_norm(const GroupVec& g) const;
  std::string label(const Elem& x) const;

private:
  void check(const Elem& x) const;
  int dim_ = 1;
  GroupNorm norm_ = GroupNorm::L1;
};

// Sampled checks of the monoid structure: associativity, identity,
// inverse laws, star antidistribution, idempotent shape, the arithmetic
// form of the natural order, and the embedding identities.
Report verify_bicyclic_identities(const BicyclicMonoid& M,
                                  std::uint64_t seed, std::uint64_t samples,
                                  std::int64_t coord_bound);

// Sampled checks of the norm: star invariance, vanishing on idempotents,
// the pseudo-norm axioms for v[x + y*], the closed sum formula,
// subadditivity, cyclic permutability and norm preservation under the
// embedding.
Report verify_bicyclic_pseudonorm(const BicyclicMonoid& M,
                                  std::uint64_t seed, std::uint64_t samples,
                                  std::int64_t coord_bound);

}  // namespace nisg
