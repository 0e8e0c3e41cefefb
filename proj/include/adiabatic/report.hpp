#pragma once

// CSV and JSON renderings of experiment results. CSV floats use 17
// significant digits, ',' separators and '\n' line endings.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "adiabatic/evolution.hpp"
#include "adiabatic/lower_bound.hpp"
#include "adiabatic/satquery.hpp"
#include "adiabatic/spectral.hpp"
#include "adiabatic/trotter.hpp"

namespace adiabatic {

/// printf "%.17g".
std::string format_double(double value);

/// "# key=value key=value ... seed=<seed>\n"
std::string header_comment(const std::vector<std::pair<std::string, std::string>>& fields, std::uint64_t seed);

void write_csv(std::ostream& out, const SpectralReport& report);
nlohmann::json to_json(const SpectralReport& report);

nlohmann::json to_json(const EvolutionResult& result);
void write_csv(std::ostream& out, const EvolutionResult& result);

void write_csv(std::ostream& out, const std::vector<TrotterErrorRow>& rows);
nlohmann::json to_json(const std::vector<TrotterErrorRow>& rows);

void write_csv(std::ostream& out, const Lemma1Report& report);
nlohmann::json to_json(const Lemma1Report& report);

void write_csv(std::ostream& out, const std::vector<LowerBoundDiagnostic>& rows);
nlohmann::json to_json(const std::vector<LowerBoundDiagnostic>& rows);

void write_csv(std::ostream& out, const std::vector<MinGapRow>& rows);
nlohmann::json to_json(const std::vector<MinGapRow>& rows);

void write_csv(std::ostream& out, const std::vector<SearchDelayRow>& rows);
nlohmann::json to_json(const std::vector<SearchDelayRow>& rows);

void write_csv(std::ostream& out, int n, const std::vector<ReconstructionRow>& rows);
nlohmann::json to_json(int n, const std::vector<ReconstructionRow>& rows);

}  // namespace adiabatic
