#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nisg/rational.hpp"

namespace nisg {

struct WitnessElement {
  int index = -1;
  std::string label;
};

// One violated instance of an assertion, with both sides evaluated exactly.
struct Witness {
  std::vector<WitnessElement> elements;
  std::string lhs;
  std::string relation;
  std::string rhs;
  std::string note;
};

struct Assertion {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;
};

// Outcome of one verification run.  Serialization is byte-deterministic for
// fixed inputs and seed, so no wall-clock data lives here.
struct Report {
  std::string kind = "report";
  std::string command;
  std::string direction;  // bridge reports only
  bool pass = true;
  bool exhaustive = true;
  std::optional<unsigned long long> seed;
  std::optional<unsigned long long> samples;
  std::optional<Rational> k_min;
  std::vector<Assertion> assertions;

  void add(Assertion a);
  void add_pass(const std::string& name);
  void add_fail(const std::string& name, Witness w);
  // Appends the other report's assertions under "prefix.name" and folds its
  // verdict, exhaustiveness and sampling data into this one.
  void merge(const Report& other, const std::string& prefix = {});
  const Assertion* find(const std::string& name) const;
};

Witness make_witness(std::vector<WitnessElement> elements, std::string lhs,
                     std::string relation, std::string rhs,
                     std::string note = {});

}  // namespace nisg
