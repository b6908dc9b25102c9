#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nisg/bicyclic.hpp"
#include "nisg/bridge.hpp"
#include "nisg/errors.hpp"
#include "nisg/generators.hpp"
#include "nisg/io.hpp"
#include "nisg/metrics.hpp"
#include "nisg/norms.hpp"
#include "nisg/parallel.hpp"
#include "nisg/semigroup.hpp"

namespace {

using namespace nisg;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int threads = 0;
  std::string format = "json";
  std::uint64_t samples = 10000;
  std::int64_t coord_bound = 100;
};

// Exit contract: 0 all assertions pass, 1 an axiom or inequality failed
// (witness in the report), 2 bad input.  Reports go to stdout, errors to
// stderr.
int emit(Report r, const GlobalOpts& g) {
  std::cout << (g.format == "text" ? report_to_text(r) : report_to_json(r));
  return r.pass ? 0 : 1;
}

void expect_inputs(const std::vector<std::string>& in, std::size_t count,
                   const std::string& shape) {
  if (in.size() != count) {
    throw input_error("expected " + shape);
  }
}

// Loads and validates a finite carrier.  A table whose axioms fail is
// reported, not thrown, so callers bail out with the report.
struct LoadedSemigroup {
  std::optional<FiniteInverseSemigroup> S;
  Report report;
};

LoadedSemigroup load_finite(const std::string& path) {
  SemigroupFile f = load_semigroup_file(path);
  SemigroupValidation v = FiniteInverseSemigroup::validate_table(
      f.n, std::move(f.table), std::move(f.labels));
  return {std::move(v.semigroup), std::move(v.report)};
}

Valuation load_valuation_for(const FiniteInverseSemigroup& S,
                             const std::string& path) {
  Valuation v = load_valuation(path);
  if (v.size() != static_cast<std::size_t>(S.size())) {
    throw input_error("valuation size does not match the carrier");
  }
  return v;
}

int run_generate(const std::string& family, int n, int k,
                 const std::string& norm_name, const std::string& a_path,
                 const std::string& b_path, const std::string& out,
                 const GlobalOpts& g) {
  if (family == "bicyclic") {
    GroupNorm norm;
    if (norm_name == "l1") {
      norm = GroupNorm::L1;
    } else if (norm_name == "linf") {
      norm = GroupNorm::LInf;
    } else {
      throw input_error("--norm must be l1 or linf");
    }
    save_bicyclic(BicyclicDescriptor{k, norm}, out);
    return 0;
  }
  std::optional<FiniteInverseSemigroup> S;
  if (family == "trivial") {
    S = make_trivial();
  } else if (family == "cyclic") {
    S = make_cyclic_group(n);
  } else if (family == "chain") {
    S = make_chain_semilattice(n);
  } else if (family == "powerset") {
    S = make_powerset_semilattice(n);
  } else if (family == "sym-inverse") {
    S = make_symmetric_inverse_monoid(n);
  } else if (family == "clifford-product") {
    S = make_direct_product(make_cyclic_group(n), make_powerset_semilattice(k));
  } else if (family == "product") {
    if (a_path.empty() || b_path.empty()) {
      throw input_error("--family product needs --a and --b");
    }
    LoadedSemigroup a = load_finite(a_path);
    if (!a.S) return emit(std::move(a.report), g);
    LoadedSemigroup b = load_finite(b_path);
    if (!b.S) return emit(std::move(b.report), g);
    S = make_direct_product(*a.S, *b.S);
  } else {
    throw input_error("unknown family \"" + family + "\"");
  }
  save_semigroup(*S, out);
  return 0;
}

int run_verify(const std::string& what, const std::vector<std::string>& in,
               const GlobalOpts& g) {
  const std::string command = "verify --what " + what;

  if (what == "semigroup" || what == "pseudonorm") {
    if (in.size() >= 1 && file_kind(in[0]) == "bicyclic") {
      expect_inputs(in, 1, "one bicyclic descriptor");
      const BicyclicDescriptor d = load_bicyclic(in[0]);
      const BicyclicMonoid M(d.k, d.norm);
      Report r = what == "semigroup"
                     ? verify_bicyclic_identities(M, g.seed, g.samples,
                                                  g.coord_bound)
                     : verify_bicyclic_pseudonorm(M, g.seed, g.samples,
                                                  g.coord_bound);
      r.command = command;
      return emit(std::move(r), g);
    }
  }

  if (what == "semigroup") {
    expect_inputs(in, 1, "one semigroup file");
    LoadedSemigroup l = load_finite(in[0]);
    l.report.command = command;
    return emit(std::move(l.report), g);
  }
  if (what == "ppm") {
    expect_inputs(in, 1, "one pairmap file");
    const PairMapFile f = load_pairmap(in[0]);
    PpmValidation v = validate_ppm(f.map);
    v.report.command = command;
    if (v.ppm) {
      v.report.merge(check_metric_chain(*v.ppm), "chain");
      v.report.merge(check_d2_core_inequality(*v.ppm), "d2");
      v.report.merge(check_radial_convexity(*v.ppm), "radial");
    }
    return emit(std::move(v.report), g);
  }
  if (what == "interlaced") {
    expect_inputs(in, 1, "one interlaced file");
    const InterlacedFile f = load_interlaced(in[0]);
    InterlacedValidation v = validate_interlaced(f.p, f.q);
    v.report.command = command;
    if (v.space) {
      v.report.merge(check_order_metric_compat(*v.space), "order");
      v.report.merge(check_d1_envelope(*v.space), "envelope");
    }
    return emit(std::move(v.report), g);
  }

  if (what == "pseudonorm" || what == "norm" || what == "bridge") {
    expect_inputs(in, 2, "a semigroup file and a valuation file");
    LoadedSemigroup l = load_finite(in[0]);
    if (!l.S) {
      l.report.command = command;
      return emit(std::move(l.report), g);
    }
    const Valuation v = load_valuation_for(*l.S, in[1]);
    if (what == "bridge") {
      Report r = verify_dclifford(*l.S, v);
      r.kind = "bridge-report";
      r.direction = "norm-to-metric";
      r.command = command;
      return emit(std::move(r), g);
    }
    Report r = validate_pseudonorm(*l.S, v);
    r.command = command;
    if (what == "norm" && r.pass) {
      r.merge(verify_norm_properties(*l.S, v), "properties");
      if (const auto w = norm_separation_witness(*l.S, v)) {
        r.add_fail("separation", *w);
      } else {
        r.add_pass("separation");
      }
    }
    return emit(std::move(r), g);
  }
  if (what == "skew") {
    expect_inputs(in, 2, "a semigroup file and a pairmap file");
    LoadedSemigroup l = load_finite(in[0]);
    if (!l.S) {
      l.report.command = command;
      return emit(std::move(l.report), g);
    }
    const PairMapFile f = load_pairmap(in[1]);
    Report r = is_skew_convex(*l.S, f.map);
    r.command = command;
    return emit(std::move(r), g);
  }
  throw input_error("unknown --what \"" + what + "\"");
}

int run_induce(const std::string& variant, const std::vector<std::string>& in,
               const std::string& out, const GlobalOpts& g) {
  const std::string command = "induce --variant " + variant;
  if (variant == "dpq") {
    expect_inputs(in, 1, "one interlaced file");
    const InterlacedFile f = load_interlaced(in[0]);
    InterlacedValidation v = validate_interlaced(f.p, f.q);
    v.report.command = command;
    if (!v.space) return emit(std::move(v.report), g);
    save_pairmap(intrinsic_dpq(*v.space), out);
    return emit(std::move(v.report), g);
  }
  expect_inputs(in, 2, "a semigroup file and a valuation file");
  LoadedSemigroup l = load_finite(in[0]);
  l.report.command = command;
  if (!l.S) return emit(std::move(l.report), g);
  const Valuation v = load_valuation_for(*l.S, in[1]);
  Report r = validate_pseudonorm(*l.S, v);
  r.command = command;
  if (!r.pass) return emit(std::move(r), g);
  const InducedMetrics m = induced_metrics(*l.S, v);
  if (variant == "d0") {
    save_pairmap(m.d0, out);
  } else if (variant == "d1") {
    save_pairmap(m.d1, out);
  } else if (variant == "d2") {
    PairMap radicands(m.d2.size());
    for (int x = 0; x < m.d2.size(); ++x) {
      for (int y = 0; y < m.d2.size(); ++y) {
        radicands.at(x, y) = m.d2.radicand(x, y);
      }
    }
    save_pairmap(radicands, out, /*sqrt=*/true);
  } else {
    throw input_error("unknown --variant \"" + variant + "\"");
  }
  return emit(std::move(r), g);
}

int run_bridge(const std::string& direction, const std::vector<std::string>& in,
               const std::string& out, const GlobalOpts& g) {
  const std::string command = "bridge --direction " + direction;
  expect_inputs(in, 2, direction == "metric-to-norm"
                           ? "a semigroup file and a pairmap file"
                           : "a semigroup file and a valuation file");
  LoadedSemigroup l = load_finite(in[0]);
  if (!l.S) {
    l.report.command = command;
    return emit(std::move(l.report), g);
  }
  Report r;
  std::optional<Valuation> produced;
  if (direction == "metric-to-norm") {
    const PairMapFile f = load_pairmap(in[1]);
    MetricToNorm mn = norm_from_metric(*l.S, f.map);
    r = std::move(mn.report);
    produced = std::move(mn.v);
  } else if (direction == "roundtrip") {
    const Valuation v = load_valuation_for(*l.S, in[1]);
    r = roundtrip_check(*l.S, v);
  } else {
    throw input_error("unknown --direction \"" + direction + "\"");
  }
  r.kind = "bridge-report";
  r.direction = direction;
  r.command = command;
  if (!out.empty()) {
    if (!produced) {
      throw input_error("--out needs --direction metric-to-norm");
    }
    if (r.pass) save_valuation(*produced, out);
  }
  return emit(std::move(r), g);
}

int run_classify(const std::vector<std::string>& in, const std::string& out,
                 const GlobalOpts& g) {
  expect_inputs(in, 2, "a semigroup file and a valuation file");
  LoadedSemigroup l = load_finite(in[0]);
  if (!l.S) {
    l.report.command = "classify";
    return emit(std::move(l.report), g);
  }
  const Valuation v = load_valuation_for(*l.S, in[1]);
  const NormClassification c = classify(*l.S, v);
  const std::string text =
      g.format == "text" ? classification_to_text(c) : classification_to_json(c);
  std::cout << text;
  if (!out.empty()) write_text_file(out, classification_to_json(c));
  return 0;
}

int run_quotient(const std::vector<std::string>& in, const std::string& out,
                 const GlobalOpts& g) {
  expect_inputs(in, 1, "one interlaced file");
  const InterlacedFile f = load_interlaced(in[0]);
  InterlacedValidation v = validate_interlaced(f.p, f.q);
  v.report.command = "quotient";
  if (!v.space) return emit(std::move(v.report), g);
  const QuotientResult q = quotient_interlaced(*v.space);
  save_interlaced(q.space.p(), q.space.q(), out, &q.projection);
  return emit(std::move(v.report), g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of normed inverse semigroups"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "PRNG seed for sampled checks");
  app.add_option("--threads", g.threads,
                 "Worker threads for exhaustive scans (0 = hardware)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--samples", g.samples,
                 "Sample count for the symbolic carrier");
  app.add_option("--coord-bound", g.coord_bound,
                 "Coordinate bound for sampled bicyclic elements");

  std::string family, norm_name = "l1", a_path, b_path, out;
  int n = 1, k = 1;
  CLI::App* gen = app.add_subcommand("generate", "Write a structure file");
  gen->fallthrough();
  gen->add_option("--family", family, "Carrier family")
      ->required()
      ->check(CLI::IsMember({"trivial", "cyclic", "chain", "powerset",
                             "sym-inverse", "clifford-product", "product",
                             "bicyclic"}));
  gen->add_option("--n", n, "Primary size parameter");
  gen->add_option("--k", k, "Secondary size parameter / bicyclic dimension");
  gen->add_option("--norm", norm_name, "Group norm for bicyclic (l1|linf)");
  gen->add_option("--a", a_path, "Left factor file for --family product");
  gen->add_option("--b", b_path, "Right factor file for --family product");
  gen->add_option("--out", out, "Output path")->required();

  std::string what;
  std::vector<std::string> inputs;
  CLI::App* ver = app.add_subcommand("verify", "Check axioms and properties");
  ver->fallthrough();
  ver->add_option("--what", what, "Verification target")
      ->required()
      ->check(CLI::IsMember({"semigroup", "pseudonorm", "norm", "ppm",
                             "interlaced", "skew", "bridge"}));
  ver->add_option("inputs", inputs, "Input files");

  std::string variant, ind_out;
  std::vector<std::string> ind_inputs;
  CLI::App* ind = app.add_subcommand("induce", "Write an induced (pseudo-)metric");
  ind->fallthrough();
  ind->add_option("--variant", variant, "Which metric")
      ->required()
      ->check(CLI::IsMember({"d0", "d1", "d2", "dpq"}));
  ind->add_option("inputs", ind_inputs, "Input files");
  ind->add_option("--out", ind_out, "Output path")->required();

  std::string direction, br_out;
  std::vector<std::string> br_inputs;
  CLI::App* br = app.add_subcommand("bridge", "Metric/norm correspondence");
  br->fallthrough();
  br->add_option("--direction", direction, "Which way")
      ->required()
      ->check(CLI::IsMember({"metric-to-norm", "roundtrip"}));
  br->add_option("inputs", br_inputs, "Input files");
  br->add_option("--out", br_out, "Valuation output path");

  std::vector<std::string> cls_inputs;
  std::string cls_out;
  CLI::App* cls = app.add_subcommand("classify", "Norm classification flags");
  cls->fallthrough();
  cls->add_option("inputs", cls_inputs, "Input files");
  cls->add_option("--out", cls_out, "Classification output path");

  std::vector<std::string> quo_inputs;
  std::string quo_out;
  CLI::App* quo = app.add_subcommand("quotient", "Collapse zero-distance pairs");
  quo->fallthrough();
  quo->add_option("inputs", quo_inputs, "Input file");
  quo->add_option("--out", quo_out, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_thread_count(g.threads);
  try {
    if (*gen) return run_generate(family, n, k, norm_name, a_path, b_path, out, g);
    if (*ver) return run_verify(what, inputs, g);
    if (*ind) return run_induce(variant, ind_inputs, ind_out, g);
    if (*br) return run_bridge(direction, br_inputs, br_out, g);
    if (*cls) return run_classify(cls_inputs, cls_out, g);
    if (*quo) return run_quotient(quo_inputs, quo_out, g);
  } catch (const nisg::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nisg::invariant_error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
