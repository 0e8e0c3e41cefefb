#pragma once

// JSON problem descriptions:
//   {"family": "hamming_weight", "n": 6, "params": {}}
//   {"family": "search", "n": 6, "params": {"u": "010011"}}
//   {"family": "perturbed", "n": 8, "params": {"epsilon": 0.25, "p": [0.5, -1]}}
//   {"family": "perturbed_spike", "n": 8, "params": {}}
//   {"family": "custom", "n": 2, "params": {"values": [0, 1, 1, -1]}}
// "p" lists the perturbed values for weights k0..n in increasing weight.

#include <string>

#include <json.hpp>

#include "adiabatic/hamiltonian.hpp"

namespace adiabatic {

nlohmann::json family_to_json(const ProblemFamily& family);

/// Throws ParseError on missing or mistyped fields; family validation errors propagate.
ProblemFamily family_from_json(const nlohmann::json& doc);

ProblemFamily load_family(const std::string& path);

/// Accepts hamming_weight, search, perturbed, perturbed_spike and custom, with
/// '-' and '_' interchangeable.
std::string canonical_family_name(const std::string& name);

}  // namespace adiabatic
