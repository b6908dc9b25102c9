#include "nisg/io.hpp"

#include <cstdint>
#include <fstream>
#include <utility>

#include "json.hpp"
#include "nisg/errors.hpp"
#include "nisg/rational.hpp"

namespace nisg {

namespace {

using Json = nlohmann::ordered_json;

Json parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw input_error("cannot open \"" + path + "\"");
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw input_error("invalid JSON in \"" + path + "\": " + e.what());
  }
  if (!j.is_object()) {
    throw input_error("\"" + path + "\": top level is not an object");
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const Json& field(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw input_error(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

void expect_kind(const Json& j, const std::string& want,
                 const std::string& where) {
  const Json& k = field(j, "kind", where);
  if (!k.is_string() || k.get<std::string>() != want) {
    throw input_error(where + ": expected kind \"" + want + "\"");
  }
}

int get_count(const Json& j, const char* key, const std::string& where) {
  const Json& n = field(j, key, where);
  if (!n.is_number_integer()) {
    throw input_error(where + ": \"" + key + "\" must be an integer");
  }
  const std::int64_t v = n.get<std::int64_t>();
  if (v < 1 || v > kMaxElements) {
    throw input_error(where + ": \"" + key + "\" out of range");
  }
  return static_cast<int>(v);
}

// Rationals travel as strings only; a JSON number here is a format error.
Rational get_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw input_error(where + ": rationals must be \"num/den\" strings");
  }
  return parse_rational(j.get<std::string>());
}

PairMap pairmap_from_json(const Json& j, const std::string& where) {
  expect_kind(j, "pairmap", where);
  const int n = get_count(j, "n", where);
  const Json& rows = field(j, "values", where);
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
    throw input_error(where + ": \"values\" must be an n-row array");
  }
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw input_error(where + ": each row must hold n entries");
    }
    for (const Json& cell : row) {
      values.push_back(get_rational(cell, where));
    }
  }
  return PairMap(n, std::move(values));
}

Json pairmap_to_json(const PairMap& p, bool sqrt) {
  Json j;
  j["kind"] = "pairmap";
  j["n"] = p.size();
  if (sqrt) {
    j["sqrt"] = true;
  }
  Json rows = Json::array();
  for (int x = 0; x < p.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < p.size(); ++y) {
      row.push_back(format_rational(p.at(x, y)));
    }
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  return j;
}

bool get_sqrt_flag(const Json& j, const std::string& where) {
  const auto it = j.find("sqrt");
  if (it == j.end()) {
    return false;
  }
  if (!it->is_boolean()) {
    throw input_error(where + ": \"sqrt\" must be a boolean");
  }
  return it->get<bool>();
}

Json witness_to_json(const Witness& w) {
  Json j;
  Json elems = Json::array();
  for (const WitnessElement& e : w.elements) {
    Json one;
    one["index"] = e.index;
    one["label"] = e.label;
    elems.push_back(std::move(one));
  }
  j["elements"] = std::move(elems);
  j["lhs"] = w.lhs;
  j["relation"] = w.relation;
  j["rhs"] = w.rhs;
  if (!w.note.empty()) {
    j["note"] = w.note;
  }
  return j;
}

std::string witness_to_text(const Witness& w, const std::string& indent) {
  std::string out;
  out += indent + "at:";
  if (w.elements.empty()) {
    out += " (none)";
  }
  for (const WitnessElement& e : w.elements) {
    out += " " + std::to_string(e.index);
    if (!e.label.empty()) {
      out += " \"" + e.label + "\"";
    }
  }
  out += "\n" + indent + w.lhs + " " + w.relation + " " + w.rhs;
  if (!w.note.empty()) {
    out += "  (" + w.note + ")";
  }
  out += "\n";
  return out;
}

}  // namespace

std::string file_kind(const std::string& path) {
  const Json j = parse_file(path);
  const Json& k = field(j, "kind", "\"" + path + "\"");
  if (!k.is_string()) {
    throw input_error("\"" + path + "\": \"kind\" must be a string");
  }
  return k.get<std::string>();
}

SemigroupFile load_semigroup_file(const std::string& path) {
  const std::string where = "\"" + path + "\"";
  const Json j = parse_file(path);
  expect_kind(j, "semigroup", where);
  SemigroupFile out;
  out.n = get_count(j, "n", where);
  const Json& rows = field(j, "table", where);
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(out.n)) {
    throw input_error(where + ": \"table\" must be an n-row array");
  }
  out.table.reserve(static_cast<std::size_t>(out.n) * out.n);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(out.n)) {
      throw input_error(where + ": each table row must hold n entries");
    }
    for (const Json& cell : row) {
      if (!cell.is_number_integer()) {
        throw input_error(where + ": table entries must be integers");
      }
      const std::int64_t v = cell.get<std::int64_t>();
      if (v < INT32_MIN || v > INT32_MAX) {
        throw input_error(where + ": table entry out of range");
      }
      out.table.push_back(static_cast<int>(v));
    }
  }
  const auto lab = j.find("labels");
  if (lab != j.end()) {
    if (!lab->is_array() || lab->size() != static_cast<std::size_t>(out.n)) {
      throw input_error(where + ": \"labels\" must hold n strings");
    }
    for (const Json& cell : *lab) {
      if (!cell.is_string()) {
        throw input_error(where + ": labels must be strings");
      }
      out.labels.push_back(cell.get<std::string>());
    }
  }
  return out;
}

void save_semigroup(const FiniteInverseSemigroup& S, const std::string& path) {
  Json j;
  j["kind"] = "semigroup";
  j["n"] = S.size();
  Json rows = Json::array();
  for (int x = 0; x < S.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < S.size(); ++y) {
      row.push_back(S.op(x, y));
    }
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["labels"] = S.labels();
  write_text_file(path, dump(j));
}

PairMapFile load_pairmap(const std::string& path) {
  const std::string where = "\"" + path + "\"";
  const Json j = parse_file(path);
  PairMapFile out{pairmap_from_json(j, where), get_sqrt_flag(j, where)};
  return out;
}

void save_pairmap(const PairMap& map, const std::string& path, bool sqrt) {
  write_text_file(path, dump(pairmap_to_json(map, sqrt)));
}

Valuation load_valuation(const std::string& path) {
  const std::string where = "\"" + path + "\"";
  const Json j = parse_file(path);
  expect_kind(j, "valuation", where);
  const int n = get_count(j, "n", where);
  const Json& vals = field(j, "values", where);
  if (!vals.is_array() || vals.size() != static_cast<std::size_t>(n)) {
    throw input_error(where + ": \"values\" must hold n entries");
  }
  Valuation v;
  v.reserve(static_cast<std::size_t>(n));
  for (const Json& cell : vals) {
    v.push_back(get_rational(cell, where));
  }
  return v;
}

void save_valuation(const Valuation& v, const std::string& path) {
  Json j;
  j["kind"] = "valuation";
  j["n"] = v.size();
  Json vals = Json::array();
  for (const Rational& r : v) {
    vals.push_back(format_rational(r));
  }
  j["values"] = std::move(vals);
  write_text_file(path, dump(j));
}

InterlacedFile load_interlaced(const std::string& path) {
  const std::string where = "\"" + path + "\"";
  const Json j = parse_file(path);
  expect_kind(j, "interlaced", where);
  InterlacedFile out{pairmap_from_json(field(j, "p", where), where + " (p)"),
                     pairmap_from_json(field(j, "q", where), where + " (q)")};
  if (out.p.size() != out.q.size()) {
    throw input_error(where + ": p and q sizes differ");
  }
  return out;
}

void save_interlaced(const PairMap& p, const PairMap& q,
                     const std::string& path,
                     const std::vector<int>* projection) {
  Json j;
  j["kind"] = "interlaced";
  j["p"] = pairmap_to_json(p, false);
  j["q"] = pairmap_to_json(q, false);
  if (projection != nullptr) {
    j["projection"] = *projection;
  }
  write_text_file(path, dump(j));
}

BicyclicDescriptor load_bicyclic(const std::string& path) {
  const std::string where = "\"" + path + "\"";
  const Json j = parse_file(path);
  expect_kind(j, "bicyclic", where);
  BicyclicDescriptor out;
  const Json& k = field(j, "k", where);
  if (!k.is_number_integer()) {
    throw input_error(where + ": \"k\" must be an integer");
  }
  const std::int64_t kk = k.get<std::int64_t>();
  if (kk < 1 || kk > 64) {
    throw input_error(where + ": \"k\" out of range");
  }
  out.k = static_cast<int>(kk);
  const Json& nm = field(j, "norm", where);
  if (!nm.is_string()) {
    throw input_error(where + ": \"norm\" must be \"l1\" or \"linf\"");
  }
  const std::string name = nm.get<std::string>();
  if (name == "l1") {
    out.norm = GroupNorm::L1;
  } else if (name == "linf") {
    out.norm = GroupNorm::LInf;
  } else {
    throw input_error(where + ": \"norm\" must be \"l1\" or \"linf\"");
  }
  return out;
}

void save_bicyclic(const BicyclicDescriptor& d, const std::string& path) {
  Json j;
  j["kind"] = "bicyclic";
  j["k"] = d.k;
  j["norm"] = d.norm == GroupNorm::L1 ? "l1" : "linf";
  write_text_file(path, dump(j));
}

std::string report_to_json(const Report& r) {
  Json j;
  j["kind"] = r.kind;
  if (!r.command.empty()) {
    j["command"] = r.command;
  }
  if (!r.direction.empty()) {
    j["direction"] = r.direction;
  }
  j["pass"] = r.pass;
  j["exhaustive"] = r.exhaustive;
  if (r.seed) {
    j["seed"] = *r.seed;
  }
  if (r.samples) {
    j["samples"] = *r.samples;
  }
  if (r.k_min) {
    j["k_min"] = format_rational(*r.k_min);
  }
  Json list = Json::array();
  for (const Assertion& a : r.assertions) {
    Json one;
    one["name"] = a.name;
    one["pass"] = a.pass;
    if (a.witness) {
      one["witness"] = witness_to_json(*a.witness);
    }
    list.push_back(std::move(one));
  }
  j["assertions"] = std::move(list);
  return dump(j);
}

std::string report_to_text(const Report& r) {
  std::string out = r.kind + ": " + (r.pass ? "PASS" : "FAIL") + "\n";
  if (!r.command.empty()) {
    out += "command: " + r.command + "\n";
  }
  if (!r.direction.empty()) {
    out += "direction: " + r.direction + "\n";
  }
  out += std::string("exhaustive: ") + (r.exhaustive ? "yes" : "no") + "\n";
  if (r.seed) {
    out += "seed: " + std::to_string(*r.seed) + "\n";
  }
  if (r.samples) {
    out += "samples: " + std::to_string(*r.samples) + "\n";
  }
  if (r.k_min) {
    out += "k_min: " + format_rational(*r.k_min) + "\n";
  }
  out += "assertions (" + std::to_string(r.assertions.size()) + "):\n";
  for (const Assertion& a : r.assertions) {
    out += std::string(a.pass ? "  ok    " : "  FAIL  ") + a.name + "\n";
    if (a.witness) {
      out += witness_to_text(*a.witness, "        ");
    }
  }
  return out;
}

namespace {

const std::pair<const char*, bool NormClassification::*> kFlags[] = {
    {"is_pseudonorm", &NormClassification::is_pseudonorm},
    {"weakly_permutable", &NormClassification::weakly_permutable},
    {"cyclically_permutable", &NormClassification::cyclically_permutable},
    {"is_norm", &NormClassification::is_norm},
    {"d1_is_metric", &NormClassification::d1_is_metric},
    {"p_is_partial_metric", &NormClassification::p_is_partial_metric},
    {"leq_p_antisymmetric", &NormClassification::leq_p_antisymmetric},
    {"leq_p_equals_leq_s", &NormClassification::leq_p_equals_leq_s},
};

}  // namespace

std::string classification_to_json(const NormClassification& c) {
  Json j;
  j["kind"] = "classification";
  for (const auto& [name, member] : kFlags) {
    j[name] = c.*member;
  }
  Json w = Json::object();
  for (const auto& [name, witness] : c.witnesses) {
    w[name] = witness_to_json(witness);
  }
  j["witnesses"] = std::move(w);
  return dump(j);
}

std::string classification_to_text(const NormClassification& c) {
  std::string out = "classification:\n";
  for (const auto& [name, member] : kFlags) {
    out += std::string("  ") + name + ": " + (c.*member ? "true" : "false") +
           "\n";
  }
  if (!c.witnesses.empty()) {
    out += "witnesses:\n";
    for (const auto& [name, witness] : c.witnesses) {
      out += "  " + name + ":\n";
      out += witness_to_text(witness, "    ");
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw input_error("cannot write \"" + path + "\"");
  }
  out << text;
  out.flush();
  if (!out) {
    throw input_error("short write to \"" + path + "\"");
  }
}

}  // namespace nisg
