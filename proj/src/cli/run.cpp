#include <algorithm>
#include <charconv>
#include <iostream>

#include <CLI11.hpp>

#include "adiabatic/cli.hpp"

namespace adiabatic::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

int to_int(const std::string& text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("not an integer: '" + text + "'");
  }
  return value;
}

double to_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw UsageError("not a number: '" + text + "'");
    return value;
  } catch (const std::logic_error&) {
    throw UsageError("not a number: '" + text + "'");
  }
}

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json doc = {{"command", c.command}, {"family", c.family}, {"problem", c.problem}, {"n", c.n_values},
                        {"u", c.u},             {"grid", c.grid},     {"backend", c.backend}, {"schedule", c.schedule},
                        {"T", c.T_values},      {"r", c.r_values},    {"delta", c.delta},     {"trials", c.trials},
                        {"seed", c.seed},       {"formula", c.formula}, {"verify_all", c.verify_all},
                        {"method", c.method},   {"out", c.out},       {"json", c.json}};
  doc["c"] = c.c ? nlohmann::json(*c.c) : nlohmann::json(nullptr);
  return doc;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
  }
  for (const auto& part : split(text, ',')) values.push_back(to_int(part));
  return values;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(to_double(part));
  return values;
}

RunConfig parse_arguments(const std::vector<std::string>& args) {
  RunConfig config;
  std::string n_text, T_text, r_text;
  double c_value = 0.0;
  std::vector<CLI::Option*> c_options;

  CLI::App app{"Adiabatic quantum computation experiments", "adiabatic-lab"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", config.out, "Report path (stdout when omitted)");
    sub->add_flag("--json", config.json, "Write the report as JSON instead of CSV");
    sub->add_option("--seed", config.seed, "Seed recorded in the report header");
  };
  auto family = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "hamming-weight | search | perturbed-spike | perturbed | custom");
    sub->add_option("--problem", config.problem, "JSON problem file");
    sub->add_option("--u", config.u, "Marked string for the search family");
    sub->add_option("--backend", config.backend, "dense | dicke");
  };

  auto* gap_scan = app.add_subcommand("gap-scan", "Two lowest levels of H(s) on a uniform grid");
  family(gap_scan);
  gap_scan->add_option("--n", n_text, "Number of qubits");
  gap_scan->add_option("--grid", config.grid, "Grid points on [0,1]");
  common(gap_scan);

  auto* scaling = app.add_subcommand("min-gap-scaling", "Minimum gap for a range of n");
  family(scaling);
  scaling->add_option("--n", n_text, "Range such as 8..24");
  common(scaling);

  auto* evolve = app.add_subcommand("evolve", "Integrate the adiabatic evolution");
  family(evolve);
  evolve->add_option("--n", n_text, "Number of qubits");
  evolve->add_option("--schedule", config.schedule, "constant | adaptive");
  evolve->add_option("--T", T_text, "Total time of the constant schedule");
  c_options.push_back(evolve->add_option("--c", c_value, "Constant of the adaptive schedule c/g(s)^2"));
  common(evolve);

  auto* delay = app.add_subcommand("search-delay", "Adaptive search delay by quadrature and in closed form");
  delay->add_option("--n", n_text, "Range such as 2..20");
  c_options.push_back(delay->add_option("--c", c_value, "Schedule constant"));
  common(delay);

  auto* sweep = app.add_subcommand("trotter-sweep", "Trotter gate sequence error against continuous evolution");
  family(sweep);
  sweep->add_option("--n", n_text, "Number of qubits");
  sweep->add_option("--T", T_text, "Comma separated total times");
  sweep->add_option("--r", r_text, "Comma separated step counts");
  sweep->add_option("--trials", config.trials, "Random initial states per row");
  common(sweep);

  auto* lemma = app.add_subcommand("lemma1-check", "Perturbation bound with random bounded E(t)");
  family(lemma);
  lemma->add_option("--n", n_text, "Number of qubits");
  lemma->add_option("--T", T_text, "Total time");
  lemma->add_option("--delta", config.delta, "Bound on ||E(t)||");
  lemma->add_option("--trials", config.trials, "Random perturbations");
  common(lemma);

  auto* lower = app.add_subcommand("lower-bound", "A/B diagnostic for the spike family");
  lower->add_option("--n", n_text, "Range such as 4..12");
  lower->add_option("--method", config.method, "dense | reduced")->check(CLI::IsMember({"dense", "reduced"}));
  common(lower);

  auto* sat = app.add_subcommand("sat-reconstruct", "Rebuild F_Phi from low-weight queries");
  sat->add_option("--formula", config.formula, "DIMACS 3-CNF file")->required();
  sat->add_flag("--verify-all", config.verify_all, "Compare on all 2^n strings");
  common(sat);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    if (what.empty()) what = e.get_name();
    throw UsageError(what + "\n" + app.help());
  }

  const auto* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  if (!n_text.empty()) config.n_values = parse_int_list(n_text);
  if (!T_text.empty()) config.T_values = parse_double_list(T_text);
  if (!r_text.empty()) {
    for (int r : parse_int_list(r_text)) config.r_values.push_back(r);
  }
  for (const auto* option : c_options) {
    if (option->count() > 0) config.c = c_value;
  }
  return config;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_arguments(args);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return execute(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace adiabatic::cli
