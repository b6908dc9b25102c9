#pragma once

#include <string>
#include <vector>

#include "nisg/bicyclic.hpp"
#include "nisg/norms.hpp"
#include "nisg/pairmap.hpp"
#include "nisg/report.hpp"
#include "nisg/semigroup.hpp"

namespace nisg {

// Raw structure file contents.  Left unvalidated so a broken table can be
// loaded and then reported on by validate_table.
struct SemigroupFile {
  int n = 0;
  std::vector<int> table;           // row-major n*n
  std::vector<std::string> labels;  // empty when the file has none
};

// The top-level "kind" field of a JSON document.
std::string file_kind(const std::string& path);

SemigroupFile load_semigroup_file(const std::string& path);
void save_semigroup(const FiniteInverseSemigroup& S, const std::string& path);

struct PairMapFile {
  PairMap map;
  bool sqrt = false;  // entries are squared radicands
};

PairMapFile load_pairmap(const std::string& path);
void save_pairmap(const PairMap& map, const std::string& path,
                  bool sqrt = false);

Valuation load_valuation(const std::string& path);
void save_valuation(const Valuation& v, const std::string& path);

struct InterlacedFile {
  PairMap p;
  PairMap q;
};

InterlacedFile load_interlaced(const std::string& path);
// projection, when given, records a quotient map point -> class index.
void save_interlaced(const PairMap& p, const PairMap& q,
                     const std::string& path,
                     const std::vector<int>* projection = nullptr);

// Descriptor for the symbolic carrier; there is no table to store.
struct BicyclicDescriptor {
  int k = 1;
  GroupNorm norm = GroupNorm::L1;
};

BicyclicDescriptor load_bicyclic(const std::string& path);
void save_bicyclic(const BicyclicDescriptor& d, const std::string& path);

// Byte-deterministic for fixed input: fixed field order, no wall-clock
// data, LF newlines.  Rationals are "num/den" strings throughout.
std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

std::string classification_to_json(const NormClassification& c);
std::string classification_to_text(const NormClassification& c);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace nisg
