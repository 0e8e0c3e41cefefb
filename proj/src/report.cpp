#include "adiabatic/report.hpp"

#include <cstdio>

namespace adiabatic {

using nlohmann::json;

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string header_comment(const std::vector<std::pair<std::string, std::string>>& fields, std::uint64_t seed) {
  std::string out = "#";
  for (const auto& [k, v] : fields) out += " " + k + "=" + v;
  out += " seed=" + std::to_string(seed) + "\n";
  return out;
}

void write_csv(std::ostream& out, const SpectralReport& r) {
  out << "s,lambda0,lambda1,gap\n";
  for (std::size_t i = 0; i < r.s_grid.size(); ++i) {
    out << format_double(r.s_grid[i]) << ',' << format_double(r.lambda0[i]) << ',' << format_double(r.lambda1[i]) << ','
        << format_double(r.gap[i]) << '\n';
  }
}

json to_json(const SpectralReport& r) {
  return {{"family", r.family}, {"backend", to_string(r.backend)}, {"s", r.s_grid},
          {"lambda0", r.lambda0}, {"lambda1", r.lambda1},          {"gap", r.gap},
          {"s_star", r.s_star},  {"g_min", r.g_min},               {"delta_max", r.delta_max}};
}

json to_json(const EvolutionResult& r) {
  return {{"family", r.family},       {"schedule", r.schedule},     {"total_delay", r.total_delay},
          {"overlap_ground", r.overlap_ground}, {"norm_drift", r.norm_drift}, {"steps", r.steps}};
}

void write_csv(std::ostream& out, const EvolutionResult& r) {
  out << "family,schedule,total_delay,overlap_ground,norm_drift,steps\n";
  out << '"' << r.family << "\"," << r.schedule << ',' << format_double(r.total_delay) << ','
      << format_double(r.overlap_ground) << ',' << format_double(r.norm_drift) << ',' << r.steps << '\n';
}

void write_csv(std::ostream& out, const std::vector<TrotterErrorRow>& rows) {
  out << "r,T,n,error_vs_reference\n";
  for (const auto& row : rows) {
    out << row.r << ',' << format_double(row.T) << ',' << row.n << ',' << format_double(row.error_vs_reference) << '\n';
  }
}

json to_json(const std::vector<TrotterErrorRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back({{"r", row.r}, {"T", row.T}, {"n", row.n}, {"error_vs_reference", row.error_vs_reference}});
  return out;
}

void write_csv(std::ostream& out, const Lemma1Report& r) {
  out << "trial,distance,bound\n";
  for (std::size_t i = 0; i < r.distances.size(); ++i) {
    out << i << ',' << format_double(r.distances[i]) << ',' << format_double(r.bound) << '\n';
  }
}

json to_json(const Lemma1Report& r) {
  return {{"n", r.n},
          {"T", r.T},
          {"delta", r.delta},
          {"bound", r.bound},
          {"slack", r.slack},
          {"max_distance", r.max_distance},
          {"median_distance", r.median_distance},
          {"all_within", r.all_within},
          {"distances", r.distances}};
}

void write_csv(std::ostream& out, const std::vector<LowerBoundDiagnostic>& rows) {
  out << "n,s_c,norm_AB,gap_at_sc,bound\n";
  for (const auto& d : rows) {
    out << d.n << ',' << format_double(d.s_c) << ',' << format_double(d.norm_AB) << ',' << format_double(d.gap_at_sc) << ','
        << format_double(d.bound) << '\n';
  }
}

json to_json(const std::vector<LowerBoundDiagnostic>& rows) {
  json out = json::array();
  for (const auto& d : rows) {
    out.push_back({{"n", d.n}, {"s_c", d.s_c}, {"norm_AB", d.norm_AB}, {"gap_at_sc", d.gap_at_sc}, {"bound", d.bound}});
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<MinGapRow>& rows) {
  out << "n,s_star,g_min,bound\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(r.s_star) << ',' << format_double(r.g_min) << ',' << format_double(r.bound) << '\n';
  }
}

json to_json(const std::vector<MinGapRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"n", r.n}, {"s_star", r.s_star}, {"g_min", r.g_min}, {"bound", r.bound}});
  return out;
}

void write_csv(std::ostream& out, const std::vector<SearchDelayRow>& rows) {
  out << "n,c,quadrature,closed_form,relative_error,ratio_to_sqrt_dim\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(r.c) << ',' << format_double(r.quadrature) << ',' << format_double(r.closed_form)
        << ',' << format_double(r.relative_error) << ',' << format_double(r.ratio_to_sqrt_dim) << '\n';
  }
}

json to_json(const std::vector<SearchDelayRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"c", r.c},
                   {"quadrature", r.quadrature},
                   {"closed_form", r.closed_form},
                   {"relative_error", r.relative_error},
                   {"ratio_to_sqrt_dim", r.ratio_to_sqrt_dim}});
  }
  return out;
}

void write_csv(std::ostream& out, int n, const std::vector<ReconstructionRow>& rows) {
  out << "b,F_reconstructed,F_direct,match\n";
  for (const auto& r : rows) {
    out << to_bitstring(r.b, n) << ',' << r.reconstructed << ',' << r.direct << ',' << (r.match ? "true" : "false") << '\n';
  }
}

json to_json(int n, const std::vector<ReconstructionRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"b", to_bitstring(r.b, n)}, {"F_reconstructed", r.reconstructed}, {"F_direct", r.direct}, {"match", r.match}});
  }
  return out;
}

}  // namespace adiabatic
