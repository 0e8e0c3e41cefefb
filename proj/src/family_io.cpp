#include "adiabatic/family_io.hpp"

#include <algorithm>
#include <fstream>

#include "adiabatic/error.hpp"

namespace adiabatic {

using nlohmann::json;

std::string canonical_family_name(const std::string& name) {
  std::string out = name;
  std::replace(out.begin(), out.end(), '-', '_');
  if (out == "hamming" || out == "weight") out = "hamming_weight";
  if (out == "spike") out = "perturbed_spike";
  static const char* known[] = {"hamming_weight", "search", "perturbed", "perturbed_spike", "custom"};
  for (const char* k : known) {
    if (out == k) return out;
  }
  throw ParseError("unknown family '" + name + "'");
}

json family_to_json(const ProblemFamily& family) {
  json doc;
  doc["n"] = family.n;
  json params = json::object();
  if (std::holds_alternative<HammingWeightParams>(family.params)) {
    doc["family"] = "hamming_weight";
  } else if (const auto* p = std::get_if<SearchParams>(&family.params)) {
    doc["family"] = "search";
    params["u"] = to_bitstring(p->marked, family.n);
  } else if (const auto* p = std::get_if<PerturbedParams>(&family.params)) {
    doc["family"] = "perturbed";
    params["epsilon"] = p->epsilon;
    params["p"] = p->tail;
  } else if (const auto* p = std::get_if<CustomParams>(&family.params)) {
    doc["family"] = "custom";
    params["values"] = p->values;
  }
  doc["params"] = params;
  return doc;
}

ProblemFamily family_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("problem description must be a JSON object");
    const std::string name = canonical_family_name(doc.at("family").get<std::string>());
    const int n = doc.at("n").get<int>();
    const json params = doc.contains("params") ? doc.at("params") : json::object();
    if (!params.is_object()) throw ParseError("\"params\" must be an object");
    if (name == "hamming_weight") return make_family(n, HammingWeightParams{});
    if (name == "perturbed_spike") return make_spike_family(n);
    if (name == "search") {
      const std::string u = params.at("u").get<std::string>();
      if (static_cast<int>(u.size()) != n) throw ParseError("search target u must have n bits");
      return make_family(n, SearchParams{parse_bitstring(u)});
    }
    if (name == "perturbed") {
      return make_family(n, PerturbedParams{params.at("epsilon").get<double>(), params.at("p").get<std::vector<double>>()});
    }
    return make_family(n, CustomParams{params.at("values").get<std::vector<double>>()});
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid problem description: ") + e.what());
  }
}

ProblemFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file " + path);
  try {
    return family_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError("cannot parse " + path + ": " + e.what());
  }
}

}  // namespace adiabatic
