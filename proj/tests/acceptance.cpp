// End-to-end acceptance run.  Each criterion prints one line; the binary
// exits nonzero if any of them fail.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nisg/bicyclic.hpp"
#include "nisg/bridge.hpp"
#include "nisg/fixtures.hpp"
#include "nisg/generators.hpp"
#include "nisg/io.hpp"
#include "nisg/metrics.hpp"
#include "nisg/norms.hpp"
#include "nisg/pairmap.hpp"
#include "nisg/random_instances.hpp"
#include "nisg/semigroup.hpp"

using namespace nisg;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---- criterion 1: exhaustive re-validation of every stored carrier ----

Outcome criterion_carriers() {
  const auto start = Clock::now();
  int carriers = 0;
  for (const FiniteInverseSemigroup& S : semigroup_fixtures()) {
    SemigroupValidation v =
        FiniteInverseSemigroup::validate_table(S.size(), S.table(), S.labels());
    if (!v.semigroup || !v.report.pass || !v.report.exhaustive) {
      return {false, "table validation failed on a stored carrier"};
    }
    if (!natural_order(*v.semigroup).is_partial_order()) {
      return {false, "natural order is not a partial order"};
    }
    (void)is_clifford(*v.semigroup);
    ++carriers;
  }
  const double dt = seconds_since(start);
  std::ostringstream os;
  os << carriers << " carriers re-validated exhaustively in " << dt << "s";
  return {dt < 60.0, os.str()};
}

// ---- criteria 2 and 3: the square-root bound and the chain bound ----

std::vector<PartialPseudoMetric> collected_ppms(long long* random_triples) {
  std::vector<PartialPseudoMetric> out;
  for (const NormFixture& f : norm_fixtures()) {
    PpmValidation v = validate_ppm(induced_p(f.S, f.v));
    if (v.ppm) out.push_back(std::move(*v.ppm));
  }
  *random_triples = 0;
  for (std::uint64_t seed = 0; seed < 1000 && *random_triples < 100000;
       ++seed) {
    PpmValidation v = validate_ppm(random_grid_ppm(seed, seed % 2 == 1).map);
    if (!v.ppm) continue;
    *random_triples += static_cast<long long>(v.ppm->size()) *
                       v.ppm->size() * v.ppm->size();
    out.push_back(std::move(*v.ppm));
  }
  return out;
}

Outcome criterion_d2_bound(const std::vector<PartialPseudoMetric>& ppms,
                           long long random_triples) {
  for (const PartialPseudoMetric& p : ppms) {
    const Report r = check_d2_core_inequality(p);
    if (!r.pass || !r.exhaustive) return {false, "violation found"};
  }
  std::ostringstream os;
  os << "no violation over " << ppms.size() << " spaces, " << random_triples
     << " random triples";
  return {random_triples >= 100000, os.str()};
}

Outcome criterion_chain_bound(const std::vector<PartialPseudoMetric>& ppms) {
  for (const PartialPseudoMetric& p : ppms) {
    const Report r = check_metric_chain(p);
    if (!r.pass || !r.exhaustive) return {false, "violation found"};
  }
  std::ostringstream os;
  os << "chain bound holds on all " << ppms.size() << " spaces";
  return {true, os.str()};
}

// ---- criterion 4: the sharpness family, scanned to a million ----

Outcome criterion_counter_family() {
  const auto start = Clock::now();
  const Report r = reproduce_counter_family(1000000);
  const double dt = seconds_since(start);
  std::ostringstream os;
  os << "parameters up to 1000000 checked in " << dt << "s";
  if (!r.pass) return {false, "family identity failed"};
  return {dt < 5.0, os.str()};
}

// ---- criterion 5: classification census over the catalogue ----

Outcome criterion_classification() {
  int weak = 0;
  bool has_zero = false;
  bool has_plateau = false;
  for (const NormFixture& f : norm_fixtures()) {
    if (!f.weakly_permutable) continue;
    ++weak;
    if (f.name.find("zero") != std::string::npos) has_zero = true;
    if (f.name == "grid-3x3-max") has_plateau = true;

    const NormClassification c = classify(f.S, f.v);
    if (!c.is_pseudonorm || !c.weakly_permutable) {
      return {false, "catalogue flag mismatch on " + f.name};
    }
    const bool flags[] = {c.is_norm, c.d1_is_metric, c.p_is_partial_metric,
                          c.leq_p_antisymmetric, c.leq_p_equals_leq_s};
    for (const bool b : flags) {
      if (b != flags[0]) return {false, "equivalence broken on " + f.name};
    }
    if (c.is_norm != f.separating) {
      return {false, "separation flag mismatch on " + f.name};
    }
  }
  std::ostringstream os;
  os << weak << " carriers classified, five flags agree on each";
  return {weak >= 20 && has_zero && has_plateau, os.str()};
}

// ---- criterion 6: the property battery on every stored valuation ----

Outcome criterion_properties() {
  const auto start = Clock::now();
  int count = 0;
  for (const NormFixture& f : norm_fixtures()) {
    const Report props = verify_norm_properties(f.S, f.v);
    if (!props.pass || !props.exhaustive) {
      return {false, "property battery failed on " + f.name};
    }
    const Report conv = check_subinvariance_and_convexity(f.S, f.v);
    if (!conv.pass || !conv.exhaustive) {
      return {false, "subinvariance/convexity failed on " + f.name};
    }
    ++count;
  }
  std::ostringstream os;
  os << count << " valuations, all exhaustive, " << seconds_since(start)
     << "s";
  return {true, os.str()};
}

// ---- criterion 7: both bridge directions on commuting-delta carriers ----

Outcome criterion_bridge() {
  int count = 0;
  for (const NormFixture& f : norm_fixtures()) {
    if (!is_clifford(f.S)) continue;
    const Report fwd = verify_dclifford(f.S, f.v);
    if (!fwd.pass || !fwd.exhaustive) {
      return {false, "forward direction failed on " + f.name};
    }
    const InducedMetrics m = induced_metrics(f.S, f.v);
    const MetricToNorm back = norm_from_metric(f.S, m.d1);
    if (!back.v || !back.report.pass) {
      return {false, "reverse direction failed on " + f.name};
    }
    if (*back.v != f.v) {
      return {false, "reverse direction did not recover the valuation on " +
                         f.name};
    }
    const Report rt = roundtrip_check(f.S, f.v);
    if (!rt.pass || !rt.exhaustive) {
      return {false, "roundtrip failed on " + f.name};
    }
    ++count;
  }
  std::ostringstream os;
  os << "both directions and the roundtrip hold on " << count << " carriers";
  return {count > 0, os.str()};
}

// ---- criterion 8: sampled checks on the symbolic carriers ----

Outcome criterion_bicyclic() {
  long long samples = 0;
  for (const int dim : {1, 2}) {
    for (const GroupNorm g : {GroupNorm::L1, GroupNorm::LInf}) {
      const BicyclicMonoid m(dim, g);
      const Report ids = verify_bicyclic_identities(m, 0, 10000, 100);
      const Report norm = verify_bicyclic_pseudonorm(m, 0, 10000, 100);
      if (!ids.pass || !norm.pass) return {false, "sampled violation found"};
      samples += 20000;
    }
  }
  std::ostringstream os;
  os << samples << " samples across four carriers, no violation";
  return {true, os.str()};
}

// ---- criterion 9: submodularity is closed under the transforms ----

Outcome criterion_transforms() {
  const auto start = Clock::now();
  const ConcavePL f({{Rational(1), Rational(0)},
                     {Rational(1, 2), Rational(3, 2)}},
                    Rational(0), std::nullopt);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const PairMap p = random_submodular(seed);
    if (!is_submodular_quiet(transform_max(p))) {
      return {false, "max transform broke submodularity"};
    }
    std::vector<Rational> shift;
    for (int i = 0; i < p.size(); ++i) {
      shift.push_back(rat_frac(static_cast<long>((seed + i) % 7) - 3, 2));
    }
    if (!is_submodular_quiet(transform_shift(p, shift, ShiftSide::Left)) ||
        !is_submodular_quiet(transform_shift(p, shift, ShiftSide::Right))) {
      return {false, "shift transform broke submodularity"};
    }

    const auto points = random_grid_points(seed, 6, 3);
    for (const int alpha : {1, 2, 3}) {
      if (!is_submodular_quiet(topkis_pairmap(points, alpha))) {
        return {false, "power-sum map is not submodular"};
      }
    }

    const PairMap g = random_grid_ppm(seed, seed % 2 == 1).map;
    if (!is_submodular_quiet(transform_kunzi(g, Rational(1)))) {
      return {false, "bounded-ratio transform broke submodularity"};
    }
    if (!is_submodular_quiet(transform_concave(g, f))) {
      return {false, "concave composition broke submodularity"};
    }
  }
  std::ostringstream os;
  os << "1000 seeded instances per transform, " << seconds_since(start)
     << "s";
  return {true, os.str()};
}

// ---- criterion 10: CLI exit codes and byte-stable output ----

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NISG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

Outcome criterion_cli() {
  fs::path dir = fs::temp_directory_path() /
                 ("nisg-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto at = [&dir](const char* name) { return (dir / name).string(); };

  const std::string c2 = at("chain2.json");
  if (run_cli("generate --family chain --n 2 --out " + c2).exit_code != 0) {
    return {false, "generate failed"};
  }
  const std::string v01 = at("val01.json");
  save_valuation({Rational(0), Rational(1)}, v01);

  const RunResult ok = run_cli("verify --what pseudonorm " + c2 + " " + v01);
  if (ok.exit_code != 0) return {false, "expected exit 0 on a valid pair"};
  if (run_cli("verify --what pseudonorm " + c2 + " " + v01).out != ok.out) {
    return {false, "repeat run changed bytes"};
  }

  const std::string c3 = at("chain3.json");
  const std::string g9 = at("grid9.json");
  if (run_cli("generate --family chain --n 3 --out " + c3).exit_code != 0 ||
      run_cli("generate --family product --a " + c3 + " --b " + c3 +
              " --out " + g9)
              .exit_code != 0) {
    return {false, "generate failed"};
  }
  const std::string vmax = at("vmax.json");
  save_valuation({Rational(0), Rational(1), Rational(2), Rational(1),
                  Rational(1), Rational(2), Rational(2), Rational(2),
                  Rational(2)},
                 vmax);
  const RunResult fail = run_cli("verify --what norm " + g9 + " " + vmax);
  if (fail.exit_code != 1) {
    return {false, "expected exit 1 on a non-separating valuation"};
  }
  const RunResult t1 =
      run_cli("verify --what norm " + g9 + " " + vmax + " --threads 1");
  const RunResult t7 =
      run_cli("verify --what norm " + g9 + " " + vmax + " --threads 7");
  if (t1.out != fail.out || t7.out != fail.out) {
    return {false, "thread count changed bytes"};
  }

  const std::string bad = at("bad.json");
  write_text_file(bad, "{\"kind\":\"valuation\",\"n\":2,"
                       "\"values\":[\"0\",\"1/0\"]}\n");
  if (run_cli("verify --what pseudonorm " + c2 + " " + bad).exit_code != 2) {
    return {false, "expected exit 2 on malformed input"};
  }

  return {true, "exit codes 0/1/2 as mapped, output byte-stable"};
}

}  // namespace

int main() {
  set_thread_count(0);

  long long random_triples = 0;
  const std::vector<PartialPseudoMetric> ppms = collected_ppms(&random_triples);

  struct Row {
    const char* what;
    Outcome outcome;
  };
  const Row rows[] = {
      {"stored carriers validate", criterion_carriers()},
      {"square-root lower bound", criterion_d2_bound(ppms, random_triples)},
      {"two-step chain bound", criterion_chain_bound(ppms)},
      {"sharpness family", criterion_counter_family()},
      {"classification census", criterion_classification()},
      {"property battery", criterion_properties()},
      {"metric/norm bridge", criterion_bridge()},
      {"symbolic carrier sampling", criterion_bicyclic()},
      {"transform closure", criterion_transforms()},
      {"command-line determinism", criterion_cli()},
  };

  bool all = true;
  int i = 0;
  for (const Row& row : rows) {
    ++i;
    all = all && row.outcome.pass;
    std::cout << "criterion " << i << ": "
              << (row.outcome.pass ? "PASS" : "FAIL") << " - " << row.what
              << " (" << row.outcome.detail << ")\n";
  }
  std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
  return all ? 0 : 1;
}
