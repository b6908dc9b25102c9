#include "nisg/generators.hpp"

#include <cstdint>
#include <map>
#include <utility>

#include "nisg/errors.hpp"

namespace nisg {

namespace {

FiniteInverseSemigroup validated(int n, std::vector<int> table,
                                 std::vector<std::string> labels,
                                 const char* who) {
  SemigroupValidation v = FiniteInverseSemigroup::validate_table(
      n, std::move(table), std::move(labels));
  if (!v.semigroup) {
    throw invariant_error(std::string(who) + ": generated table is invalid");
  }
  return std::move(*v.semigroup);
}

void check_size(long long n, const char* who) {
  if (n < 1) throw input_error(std::string(who) + ": size must be positive");
  if (n > kMaxElements) {
    throw input_error(std::string(who) + ": " + std::to_string(n) +
                      " elements exceed the limit of " +
                      std::to_string(kMaxElements));
  }
}

}  // namespace

FiniteInverseSemigroup make_trivial() { return make_cyclic_group(1); }

FiniteInverseSemigroup make_cyclic_group(int n) {
  check_size(n, "make_cyclic_group");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    }
  }
  return validated(n, std::move(table), std::move(labels),
                   "make_cyclic_group");
}

FiniteInverseSemigroup make_chain_semilattice(int n) {
  check_size(n, "make_chain_semilattice");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = x > y ? x : y;
    }
  }
  return validated(n, std::move(table), std::move(labels),
                   "make_chain_semilattice");
}

FiniteInverseSemigroup make_powerset_semilattice(int ground) {
  if (ground < 0) throw input_error("make_powerset_semilattice: negative ground");
  if (ground > 9) {
    throw input_error("make_powerset_semilattice: ground set too large");
  }
  const int n = 1 << ground;
  check_size(n, "make_powerset_semilattice");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::string l = "{";
    for (int b = 0; b < ground; ++b) {
      if (x & (1 << b)) {
        if (l.size() > 1) l += ",";
        l += std::to_string(b);
      }
    }
    l += "}";
    labels.push_back(std::move(l));
    for (int y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = x | y;
    }
  }
  return validated(n, std::move(table), std::move(labels),
                   "make_powerset_semilattice");
}

FiniteInverseSemigroup make_symmetric_inverse_monoid(int k) {
  if (k < 1 || k > 4) {
    throw input_error(
        "make_symmetric_inverse_monoid: degree must be between 1 and 4");
  }
  // Enumerate image vectors (-1 = undefined) with injective defined part.
  std::vector<std::vector<int>> elems;
  std::vector<int> img(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  const auto gen = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      elems.push_back(img);
      return;
    }
    img[static_cast<std::size_t>(pos)] = -1;
    self(self, pos + 1);
    for (int t = 0; t < k; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      used[static_cast<std::size_t>(t)] = 1;
      img[static_cast<std::size_t>(pos)] = t;
      self(self, pos + 1);
      img[static_cast<std::size_t>(pos)] = -1;
      used[static_cast<std::size_t>(t)] = 0;
    }
  };
  gen(gen, 0);

  // Expected count: sum over i of C(k,i)^2 * i!.
  std::uint64_t expected = 0;
  for (int i = 0; i <= k; ++i) {
    std::uint64_t binom = 1;
    for (int j = 0; j < i; ++j) binom = binom * (k - j) / (j + 1);
    std::uint64_t fact = 1;
    for (int j = 2; j <= i; ++j) fact *= j;
    expected += binom * binom * fact;
  }
  if (elems.size() != expected) {
    throw invariant_error("make_symmetric_inverse_monoid: element count " +
                          std::to_string(elems.size()) + " != expected " +
                          std::to_string(expected));
  }
  const int n = static_cast<int>(elems.size());
  check_size(n, "make_symmetric_inverse_monoid");

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[elems[static_cast<std::size_t>(i)]] = i;

  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(static_cast<std::size_t>(k), -1);
      for (int i = 0; i < k; ++i) {
        const int mid = elems[static_cast<std::size_t>(a)][i];
        if (mid < 0) continue;
        comp[static_cast<std::size_t>(i)] =
            elems[static_cast<std::size_t>(b)][static_cast<std::size_t>(mid)];
      }
      table[static_cast<std::size_t>(a) * n + b] = index.at(comp);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (const auto& e : elems) {
    std::string l = "[";
    for (int i = 0; i < k; ++i) {
      if (i > 0) l += ",";
      l += e[static_cast<std::size_t>(i)] < 0
               ? "-"
               : std::to_string(e[static_cast<std::size_t>(i)]);
    }
    l += "]";
    labels.push_back(std::move(l));
  }
  return validated(n, std::move(table), std::move(labels),
                   "make_symmetric_inverse_monoid");
}

FiniteInverseSemigroup make_direct_product(const FiniteInverseSemigroup& a,
                                           const FiniteInverseSemigroup& b) {
  const long long n = static_cast<long long>(a.size()) * b.size();
  check_size(n, "make_direct_product");
  const int na = a.size(), nb = b.size(), m = static_cast<int>(n);
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int xa = 0; xa < na; ++xa) {
    for (int xb = 0; xb < nb; ++xb) {
      labels.push_back("(" + a.label(xa) + "," + b.label(xb) + ")");
    }
  }
  for (int xa = 0; xa < na; ++xa) {
    for (int xb = 0; xb < nb; ++xb) {
      const int x = xa * nb + xb;
      for (int ya = 0; ya < na; ++ya) {
        for (int yb = 0; yb < nb; ++yb) {
          table[static_cast<std::size_t>(x) * m + ya * nb + yb] =
              a.op(xa, ya) * nb + b.op(xb, yb);
        }
      }
    }
  }
  return validated(m, std::move(table), std::move(labels),
                   "make_direct_product");
}

}  // namespace nisg
