#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nisg/report.hpp"

namespace nisg {

inline constexpr int kMaxElements = 512;

// Boolean relation on {0..n-1} with order-theoretic predicates.
class Relation {
public:
  Relation() = default;
  explicit Relation(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  bool get(int x, int y) const { return m_[idx(x, y)] != 0; }
  void set(int x, int y, bool v) { m_[idx(x, y)] = v ? 1 : 0; }

  bool reflexive() const;
  bool transitive() const;
  bool antisymmetric() const;
  bool is_quasiorder() const { return reflexive() && transitive(); }
  bool is_partial_order() const { return is_quasiorder() && antisymmetric(); }

  bool operator==(const Relation& other) const = default;

private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }
  int n_ = 0;
  std::vector<char> m_;
};

struct SemigroupValidation;

// Finite inverse semigroup given by its Cayley table.  Construction goes
// through validate_table, so an instance always satisfies associativity,
// unique inverses and commuting idempotents.
class FiniteInverseSemigroup {
public:
  // Checks associativity, existence and uniqueness of inverses, and
  // commutation of idempotents, then re-derives the basic identities
  // (star involution, star antidistribution, idempotent self-inverse,
  // idempotent deltas).  Structural problems with the arguments throw
  // input_error; failed axioms come back as report assertions.
  static SemigroupValidation validate_table(
      int n, std::vector<int> table, std::vector<std::string> labels = {});

  int size() const { return n_; }
  int op(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }
  int inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }
  // x + x*, always an idempotent.
  int delta(int x) const { return op(x, inv(x)); }
  bool is_idempotent(int x) const {
    return idem_flag_[static_cast<std::size_t>(x)] != 0;
  }
  const std::vector<int>& idempotents() const { return idempotents_; }
  std::optional<int> identity() const { return identity_; }
  const std::string& label(int x) const {
    return labels_[static_cast<std::size_t>(x)];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }
  bool is_commutative() const;

  WitnessElement witness(int x) const { return {x, label(x)}; }

private:
  FiniteInverseSemigroup() = default;

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<char> idem_flag_;
  std::vector<int> idempotents_;
  std::optional<int> identity_;
  std::vector<std::string> labels_;
};

struct SemigroupValidation {
  std::optional<FiniteInverseSemigroup> semigroup;
  Report report;
};

// Partial order where x <= y holds iff y = x + e for some idempotent e.
// The characterizations y = x + y* + y and y = y + y* + x, compatibility
// with the star, and the order axioms are all cross-checked; a mismatch
// throws invariant_error.
Relation natural_order(const FiniteInverseSemigroup& S);

// Evaluates the four equivalent commutation conditions (x + x* = x* + x;
// idempotents central; x + delta(x) = x; delta multiplicative) and asserts
// their agreement before answering.
bool is_clifford(const FiniteInverseSemigroup& S);

struct LocalMonoid {
  FiniteInverseSemigroup monoid;
  std::vector<int> elements;  // sub index -> parent index
  int identity = -1;          // sub index of e
};

// Sub-monoid of elements absorbed by the idempotent e on both sides.
// Throws input_error if e is not idempotent.
LocalMonoid local_monoid(const FiniteInverseSemigroup& S, int e);

}  // namespace nisg
