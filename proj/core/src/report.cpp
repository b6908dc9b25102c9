#include "nisg/report.hpp"

#include <utility>

namespace nisg {

void Report::add(Assertion a) {
  pass = pass && a.pass;
  assertions.push_back(std::move(a));
}

void Report::add_pass(const std::string& name) { add({name, true, {}}); }

void Report::add_fail(const std::string& name, Witness w) {
  add({name, false, std::move(w)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const Assertion& a : other.assertions) {
    Assertion copy = a;
    if (!prefix.empty()) copy.name = prefix + "." + copy.name;
    add(std::move(copy));
  }
  exhaustive = exhaustive && other.exhaustive;
  if (!seed && other.seed) seed = other.seed;
  if (!samples && other.samples) samples = other.samples;
  if (!k_min && other.k_min) k_min = other.k_min;
}

const Assertion* Report::find(const std::string& name) const {
  for (const Assertion& a : assertions) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

Witness make_witness(std::vector<WitnessElement> elements, std::string lhs,
                     std::string relation, std::string rhs, std::string note) {
  Witness w;
  w.elements = std::move(elements);
  w.lhs = std::move(lhs);
  w.relation = std::move(relation);
  w.rhs = std::move(rhs);
  w.note = std::move(note);
  return w;
}

}  // namespace nisg
