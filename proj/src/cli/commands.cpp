#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "adiabatic/cli.hpp"
#include "adiabatic/evolution.hpp"
#include "adiabatic/family_io.hpp"
#include "adiabatic/lower_bound.hpp"
#include "adiabatic/report.hpp"
#include "adiabatic/satquery.hpp"
#include "adiabatic/spectral.hpp"
#include "adiabatic/trotter.hpp"

namespace adiabatic::cli {
namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;
using nlohmann::json;

struct Report {
  Fields fields;
  std::function<void(std::ostream&)> csv;
  json doc;
  std::string summary;
};

void emit(const RunConfig& config, const Report& report, std::ostream& out, std::ostream& err) {
  std::ostringstream body;
  if (config.json) {
    json meta = json::object();
    for (const auto& [k, v] : report.fields) meta[k] = v;
    meta["seed"] = config.seed;
    json config_doc = to_json(config);
    config_doc.erase("out");
    json doc = {{"meta", meta}, {"config", config_doc}, {"report", report.doc}};
    body << doc.dump(2) << '\n';
  } else {
    body << header_comment(report.fields, config.seed);
    report.csv(body);
  }
  if (config.out.empty()) {
    out << body.str();
    err << report.summary << '\n';
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw ContractViolation("cannot open output file '" + config.out + "'");
  file << body.str();
  if (!file.flush()) throw ContractViolation("failed writing '" + config.out + "'");
  out << report.summary << " -> " << config.out << '\n';
}

std::vector<int> require_n(const RunConfig& config, std::vector<int> fallback = {}) {
  if (!config.n_values.empty()) return config.n_values;
  if (!fallback.empty()) return fallback;
  throw UsageError(config.command + " needs --n");
}

int single_n(const RunConfig& config, int fallback = 0) {
  const auto values = require_n(config, fallback > 0 ? std::vector<int>{fallback} : std::vector<int>{});
  if (values.size() != 1) throw UsageError(config.command + " takes a single --n");
  return values.front();
}

double single_T(const RunConfig& config) {
  if (config.T_values.size() != 1) throw UsageError(config.command + " takes a single --T");
  return config.T_values.front();
}

ProblemFamily family_for(const RunConfig& config, int n) {
  if (!config.problem.empty()) {
    ProblemFamily family = load_family(config.problem);
    if (!config.n_values.empty() && family.n != n) {
      throw UsageError("--n conflicts with n = " + std::to_string(family.n) + " in " + config.problem);
    }
    return family;
  }
  const std::string name = canonical_family_name(config.family);
  if (name == "hamming_weight") return make_family(n, HammingWeightParams{});
  if (name == "perturbed_spike") return make_spike_family(n);
  if (name == "search") {
    SearchParams params;
    if (!config.u.empty()) {
      if (static_cast<int>(config.u.size()) != n) throw UsageError("--u must have n characters");
      params.marked = parse_bitstring(config.u);
    }
    return make_family(n, params);
  }
  throw UsageError("family '" + name + "' is read from a --problem file");
}

int problem_n(const RunConfig& config, int fallback = 0) {
  if (!config.problem.empty() && config.n_values.empty()) return load_family(config.problem).n;
  return single_n(config, fallback);
}

Backend backend_for(const RunConfig& config, const ProblemFamily& family) {
  return config.backend.empty() ? preferred_backend(family) : parse_backend(config.backend);
}

Report gap_scan(const RunConfig& config) {
  const ProblemFamily family = family_for(config, problem_n(config));
  const Backend backend = backend_for(config, family);
  const auto grid = uniform_grid(config.grid);
  const SpectralReport result = gap_curve(family, grid, backend);
  Report r;
  r.fields = {{"command", config.command}, {"family", family.describe()}, {"backend", to_string(backend)},
              {"points", std::to_string(grid.size())}, {"s_star", format_double(result.s_star)},
              {"g_min", format_double(result.g_min)}, {"delta_max", format_double(result.delta_max)}};
  r.csv = [result](std::ostream& o) { write_csv(o, result); };
  r.doc = to_json(result);
  r.summary = "gap-scan " + family.describe() + " backend=" + to_string(backend) + " g_min=" + format_double(result.g_min) +
              " s_star=" + format_double(result.s_star);
  return r;
}

Report min_gap_scaling(const RunConfig& config) {
  std::vector<MinGapRow> rows;
  std::string backend_name;
  for (int n : require_n(config)) {
    const ProblemFamily family = family_for(config, n);
    const Backend backend = backend_for(config, family);
    backend_name = to_string(backend);
    rows.push_back(min_gap_row(family, backend));
  }
  const long within = std::count_if(rows.begin(), rows.end(), [](const MinGapRow& row) { return row.g_min <= row.bound; });
  Report r;
  r.fields = {{"command", config.command}, {"family", canonical_family_name(config.family)}, {"backend", backend_name}};
  r.csv = [rows](std::ostream& o) { write_csv(o, rows); };
  r.doc = to_json(rows);
  r.summary = "min-gap-scaling rows=" + std::to_string(rows.size()) + " below_bound=" + std::to_string(within) +
              " last_g_min=" + format_double(rows.back().g_min);
  return r;
}

Report evolve(const RunConfig& config) {
  const ProblemFamily family = family_for(config, problem_n(config));
  const Backend backend = backend_for(config, family);
  std::string kind = config.schedule;
  if (kind.empty()) kind = config.c ? "adaptive" : "constant";
  Schedule schedule;
  if (kind == "constant") {
    schedule = make_constant_schedule(single_T(config));
  } else if (kind == "adaptive") {
    if (!config.c) throw UsageError("adaptive schedule needs --c");
    schedule = make_adaptive_schedule(gap_function(family, backend), *config.c);
  } else {
    throw UsageError("unknown schedule '" + kind + "' (expected constant or adaptive)");
  }
  const EvolutionResult result = integrate(family, schedule, backend);
  Report r;
  r.fields = {{"command", config.command}, {"family", family.describe()}, {"backend", to_string(backend)},
              {"schedule", result.schedule}};
  r.csv = [result](std::ostream& o) { write_csv(o, result); };
  r.doc = to_json(result);
  r.summary = "evolve " + family.describe() + " schedule=" + result.schedule + " T=" + format_double(result.total_delay) +
              " overlap_ground=" + format_double(result.overlap_ground);
  return r;
}

Report search_delay(const RunConfig& config) {
  const double c = config.c.value_or(1.0);
  std::vector<SearchDelayRow> rows;
  for (int n : require_n(config)) rows.push_back(compare_search_delay(n, c));
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row.relative_error);
  Report r;
  r.fields = {{"command", config.command}, {"c", format_double(c)}};
  r.csv = [rows](std::ostream& o) { write_csv(o, rows); };
  r.doc = to_json(rows);
  r.summary = "search-delay rows=" + std::to_string(rows.size()) + " max_relative_error=" + format_double(worst);
  return r;
}

Report trotter_sweep(const RunConfig& config) {
  const ProblemFamily family = family_for(config, problem_n(config, 4));
  if (config.T_values.empty()) throw UsageError("trotter-sweep needs --T");
  if (config.r_values.empty()) throw UsageError("trotter-sweep needs --r");
  TrotterSweepOptions options;
  if (config.trials > 0) options.sample_states = config.trials;
  options.seed = config.seed;
  const auto rows = trotter_error_sweep(family, config.T_values, config.r_values, options);
  Report r;
  r.fields = {{"command", config.command}, {"family", family.describe()},
              {"sample_states", std::to_string(options.sample_states)}};
  r.csv = [rows](std::ostream& o) { write_csv(o, rows); };
  r.doc = to_json(rows);
  r.summary = "trotter-sweep " + family.describe() + " rows=" + std::to_string(rows.size()) +
              " last_error=" + format_double(rows.back().error_vs_reference);
  return r;
}

Report lemma1(const RunConfig& config) {
  const ProblemFamily family = family_for(config, problem_n(config, 3));
  Lemma1Options options;
  if (config.trials > 0) options.trials = config.trials;
  options.seed = config.seed;
  const Lemma1Report result = lemma1_check(family, single_T(config), config.delta, options);
  Report r;
  r.fields = {{"command", config.command}, {"family", family.describe()}, {"T", format_double(result.T)},
              {"delta", format_double(result.delta)}, {"trials", std::to_string(options.trials)}};
  r.csv = [result](std::ostream& o) { write_csv(o, result); };
  r.doc = to_json(result);
  r.summary = "lemma1-check " + family.describe() + " max_distance=" + format_double(result.max_distance) +
              " bound=" + format_double(result.bound) + " all_within=" + (result.all_within ? "true" : "false");
  return r;
}

Report lower_bound(const RunConfig& config) {
  const DiagnosticMethod method = config.method == "dense" ? DiagnosticMethod::dense : DiagnosticMethod::reduced;
  std::vector<LowerBoundDiagnostic> rows;
  for (int n : require_n(config)) rows.push_back(lower_bound_diagnostic(n, method));
  Report r;
  r.fields = {{"command", config.command}, {"method", config.method}};
  r.csv = [rows](std::ostream& o) { write_csv(o, rows); };
  r.doc = to_json(rows);
  r.summary = "lower-bound rows=" + std::to_string(rows.size()) + " checks=passed";
  return r;
}

Report sat_reconstruct(const RunConfig& config) {
  const Formula3CNF phi = load_dimacs(config.formula);
  const QueryTranscript transcript = query_low_weight(formula_oracle(phi), phi.n);
  const ReconstructionTable table = compute_table(transcript);
  const SatDecision decision = decide_sat(table, phi.n);
  const auto rows = verify_reconstruction(phi, table, config.verify_all);
  const long mismatches = std::count_if(rows.begin(), rows.end(), [](const ReconstructionRow& row) { return !row.match; });
  const std::string witness = decision.witness ? to_bitstring(*decision.witness, phi.n) : "none";
  const int n = phi.n;
  Report r;
  r.fields = {{"command", config.command},
              {"n", std::to_string(n)},
              {"clauses", std::to_string(phi.clauses.size())},
              {"queries", std::to_string(transcript.query_count)},
              {"satisfiable", decision.satisfiable ? "true" : "false"},
              {"witness", witness},
              {"rows", config.verify_all ? "all" : "queried"}};
  r.csv = [rows, n](std::ostream& o) { write_csv(o, n, rows); };
  r.doc = {{"transcript", transcript_to_json(transcript)},
           {"table", table_to_json(table)},
           {"rows", to_json(n, rows)},
           {"satisfiable", decision.satisfiable},
           {"witness", decision.witness ? json(witness) : json(nullptr)}};
  r.summary = "sat-reconstruct n=" + std::to_string(n) + " queries=" + std::to_string(transcript.query_count) +
              " satisfiable=" + (decision.satisfiable ? "true" : "false") + " witness=" + witness +
              " mismatches=" + std::to_string(mismatches);
  return r;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::vector<std::pair<std::string, Report (*)(const RunConfig&)>> commands = {
      {"gap-scan", gap_scan},         {"min-gap-scaling", min_gap_scaling}, {"evolve", evolve},
      {"search-delay", search_delay}, {"trotter-sweep", trotter_sweep},     {"lemma1-check", lemma1},
      {"lower-bound", lower_bound},   {"sat-reconstruct", sat_reconstruct}};
  for (const auto& [name, fn] : commands) {
    if (name == config.command) {
      emit(config, fn(config), out, err);
      return kExitOk;
    }
  }
  throw UsageError("unknown subcommand '" + config.command + "'");
}

}  // namespace adiabatic::cli
