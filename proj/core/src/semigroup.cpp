#include "nisg/semigroup.hpp"

#include <utility>

#include "nisg/errors.hpp"
#include "nisg/parallel.hpp"

namespace nisg {

bool Relation::reflexive() const {
  for (int x = 0; x < n_; ++x) {
    if (!get(x, x)) return false;
  }
  return true;
}

bool Relation::transitive() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (!get(x, y)) continue;
      for (int z = 0; z < n_; ++z) {
        if (get(y, z) && !get(x, z)) return false;
      }
    }
  }
  return true;
}

bool Relation::antisymmetric() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (get(x, y) && get(y, x)) return false;
    }
  }
  return true;
}

SemigroupValidation FiniteInverseSemigroup::validate_table(
    int n, std::vector<int> table, std::vector<std::string> labels) {
  if (n < 1) throw input_error("element count must be positive");
  if (n > kMaxElements) {
    throw input_error("element count " + std::to_string(n) +
                      " exceeds limit " + std::to_string(kMaxElements));
  }
  if (table.size() != static_cast<std::size_t>(n) * n) {
    throw input_error("table size does not match element count");
  }
  for (int v : table) {
    if (v < 0 || v >= n) throw input_error("table entry out of range");
  }
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  } else if (labels.size() != static_cast<std::size_t>(n)) {
    throw input_error("label count does not match element count");
  }

  SemigroupValidation out;
  Report& rep = out.report;
  const auto at = [&](int x, int y) {
    return table[static_cast<std::size_t>(x) * n + y];
  };
  const auto elem = [&](int x) { return WitnessElement{x, labels[x]}; };

  const auto bad_assoc = first_bad_triple(
      n, [&](int x, int y, int z) { return at(at(x, y), z) == at(x, at(y, z)); });
  if (bad_assoc) {
    const auto [x, y, z] = *bad_assoc;
    rep.add_fail("associativity",
                 make_witness({elem(x), elem(y), elem(z)},
                              labels[at(at(x, y), z)], "==",
                              labels[at(x, at(y, z))],
                              "(x+y)+z vs x+(y+z)"));
  } else {
    rep.add_pass("associativity");
  }

  // y is an inverse candidate for x when x+y+x = x and y+x+y = y.  The
  // structure is an inverse semigroup iff each x has exactly one.
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  bool inverses_ok = true;
  for (int x = 0; x < n && inverses_ok; ++x) {
    int count = 0;
    int first = -1, second = -1;
    for (int y = 0; y < n; ++y) {
      if (at(at(x, y), x) == x && at(at(y, x), y) == y) {
        if (count == 0) first = y;
        if (count == 1) second = y;
        ++count;
      }
    }
    if (count == 1) {
      inv[static_cast<std::size_t>(x)] = first;
    } else {
      inverses_ok = false;
      Witness w = make_witness({elem(x)}, std::to_string(count), "==", "1",
                               "number of pseudo-inverse candidates");
      if (count >= 2) {
        w.elements.push_back(elem(first));
        w.elements.push_back(elem(second));
      }
      rep.add_fail("inverse-unique", w);
    }
  }
  if (inverses_ok) rep.add_pass("inverse-unique");

  std::vector<char> idem_flag(static_cast<std::size_t>(n), 0);
  std::vector<int> idems;
  for (int x = 0; x < n; ++x) {
    if (at(x, x) == x) {
      idem_flag[static_cast<std::size_t>(x)] = 1;
      idems.push_back(x);
    }
  }
  bool idems_ok = true;
  for (std::size_t i = 0; i < idems.size() && idems_ok; ++i) {
    for (std::size_t j = i + 1; j < idems.size(); ++j) {
      const int e = idems[i], f = idems[j];
      if (at(e, f) != at(f, e)) {
        idems_ok = false;
        rep.add_fail("idempotents-commute",
                     make_witness({elem(e), elem(f)}, labels[at(e, f)], "==",
                                  labels[at(f, e)], "e+f vs f+e"));
        break;
      }
    }
  }
  if (idems_ok) rep.add_pass("idempotents-commute");

  if (!rep.pass) return out;

  // Basic consequences, re-derived as cheap safety checks.
  const auto check_all = [&](const std::string& name, auto&& ok,
                             auto&& witness_at) {
    for (int x = 0; x < n; ++x) {
      if (!ok(x)) {
        rep.add_fail(name, witness_at(x));
        return;
      }
    }
    rep.add_pass(name);
  };
  check_all(
      "star-involution",
      [&](int x) { return inv[static_cast<std::size_t>(inv[x])] == x; },
      [&](int x) {
        return make_witness({elem(x)}, labels[inv[inv[x]]], "==", labels[x],
                            "(x*)* vs x");
      });
  check_all(
      "delta-idempotent",
      [&](int x) {
        const int d = at(x, inv[static_cast<std::size_t>(x)]);
        return at(d, d) == d;
      },
      [&](int x) {
        return make_witness({elem(x)}, labels[at(x, inv[x])], "idempotent", "",
                            "x+x*");
      });
  check_all(
      "idempotent-self-inverse",
      [&](int x) { return !idem_flag[static_cast<std::size_t>(x)] ||
                          inv[static_cast<std::size_t>(x)] == x; },
      [&](int x) {
        return make_witness({elem(x)}, labels[inv[x]], "==", labels[x],
                            "e* vs e");
      });
  const auto bad_antidist = first_bad_pair(n, [&](int x, int y) {
    return inv[static_cast<std::size_t>(at(x, y))] == at(inv[y], inv[x]);
  });
  if (bad_antidist) {
    const auto [x, y] = *bad_antidist;
    rep.add_fail("star-antidistribution",
                 make_witness({elem(x), elem(y)}, labels[inv[at(x, y)]], "==",
                              labels[at(inv[y], inv[x])], "(x+y)* vs y*+x*"));
  } else {
    rep.add_pass("star-antidistribution");
  }

  if (!rep.pass) return out;

  std::optional<int> identity;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = at(e, x) == x && at(x, e) == x;
    }
    if (ok) {
      identity = e;
      break;
    }
  }

  FiniteInverseSemigroup s;
  s.n_ = n;
  s.table_ = std::move(table);
  s.inv_ = std::move(inv);
  s.idem_flag_ = std::move(idem_flag);
  s.idempotents_ = std::move(idems);
  s.identity_ = identity;
  s.labels_ = std::move(labels);
  out.semigroup = std::move(s);
  return out;
}

bool FiniteInverseSemigroup::is_commutative() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (op(x, y) != op(y, x)) return false;
    }
  }
  return true;
}

Relation natural_order(const FiniteInverseSemigroup& S) {
  const int n = S.size();
  Relation leq(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool found = false;
      for (int e : S.idempotents()) {
        if (S.op(x, e) == y) {
          found = true;
          break;
        }
      }
      leq.set(x, y, found);
    }
  }
  const auto fail = [&](const char* what, int x, int y) {
    throw invariant_error(std::string("natural_order: ") + what + " at (" +
                          S.label(x) + ", " + S.label(y) + ")");
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const bool via_e = leq.get(x, y);
      const bool via_star_right = S.op(x, S.op(S.inv(y), y)) == y;
      const bool via_delta_left = S.op(S.delta(y), x) == y;
      if (via_e != via_star_right) fail("x + y* + y characterization", x, y);
      if (via_e != via_delta_left) fail("y + y* + x characterization", x, y);
      if (via_e != leq.get(S.inv(x), S.inv(y))) fail("star compatibility", x, y);
    }
  }
  if (!leq.reflexive()) throw invariant_error("natural_order: not reflexive");
  if (!leq.transitive()) throw invariant_error("natural_order: not transitive");
  if (!leq.antisymmetric()) {
    throw invariant_error("natural_order: not antisymmetric");
  }
  return leq;
}

bool is_clifford(const FiniteInverseSemigroup& S) {
  const int n = S.size();
  bool c1 = true;
  for (int x = 0; x < n && c1; ++x) {
    c1 = S.op(x, S.inv(x)) == S.op(S.inv(x), x);
  }
  bool c2 = true;
  for (int e : S.idempotents()) {
    for (int x = 0; x < n && c2; ++x) c2 = S.op(e, x) == S.op(x, e);
    if (!c2) break;
  }
  bool c3 = true;
  for (int x = 0; x < n && c3; ++x) c3 = S.op(x, S.delta(x)) == x;
  bool c4 = true;
  for (int x = 0; x < n && c4; ++x) {
    for (int y = 0; y < n && c4; ++y) {
      c4 = S.delta(S.op(x, y)) == S.op(S.delta(x), S.delta(y));
    }
  }
  if (c1 != c2 || c1 != c3 || c1 != c4) {
    throw invariant_error("is_clifford: equivalent conditions disagree");
  }
  return c1;
}

LocalMonoid local_monoid(const FiniteInverseSemigroup& S, int e) {
  if (e < 0 || e >= S.size()) throw input_error("element index out of range");
  if (!S.is_idempotent(e)) {
    throw input_error("local_monoid: " + S.label(e) + " is not idempotent");
  }
  std::vector<int> elements;
  std::vector<int> sub_index(static_cast<std::size_t>(S.size()), -1);
  for (int x = 0; x < S.size(); ++x) {
    if (S.op(x, e) == x && S.op(e, x) == x) {
      sub_index[static_cast<std::size_t>(x)] = static_cast<int>(elements.size());
      elements.push_back(x);
    }
  }
  const int m = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m, -1);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) labels.push_back(S.label(elements[i]));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int p = S.op(elements[i], elements[j]);
      const int q = sub_index[static_cast<std::size_t>(p)];
      if (q < 0) throw invariant_error("local_monoid: set not closed");
      table[static_cast<std::size_t>(i) * m + j] = q;
    }
  }
  SemigroupValidation v = FiniteInverseSemigroup::validate_table(
      m, std::move(table), std::move(labels));
  if (!v.semigroup) {
    throw invariant_error("local_monoid: submonoid failed validation");
  }
  LocalMonoid out{std::move(*v.semigroup), std::move(elements),
                  sub_index[static_cast<std::size_t>(e)]};
  if (!out.monoid.identity() || *out.monoid.identity() != out.identity) {
    throw invariant_error("local_monoid: e is not the identity");
  }
  return out;
}

}  // namespace nisg
