#pragma once

#include <stdexcept>
#include <string>

namespace nisg {

// Bad caller input: malformed files, out-of-range arguments, or violated
// preconditions that indicate misuse rather than failed mathematics.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition that holds for every valid input failed.  Always an
// implementation bug, never a property of the instance.
class invariant_error : public std::logic_error {
public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nisg
