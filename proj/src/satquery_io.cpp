#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "adiabatic/error.hpp"
#include "adiabatic/satquery.hpp"

namespace adiabatic {

using nlohmann::json;

Formula3CNF parse_dimacs(std::istream& in) {
  int n = -1;
  long declared = -1;
  RawClauses raw;
  std::vector<int> current;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string format;
      if (!(words >> format >> n >> declared) || format != "cnf" || n < 1) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p cnf <variables> <clauses>'");
      }
      continue;
    }
    if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": clause before the 'p cnf' header");
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": '" + token + "' is not a literal");
      }
      if (lit == 0) {
        if (current.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty clause");
        raw.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (n < 0) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) throw ParseError("last clause is not terminated by 0");
  if (declared >= 0 && static_cast<long>(raw.size()) != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " + std::to_string(raw.size()));
  }
  return normalize(raw, n);
}

Formula3CNF load_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open formula file " + path);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Formula3CNF& phi) {
  out << "p cnf " << phi.n << ' ' << phi.clauses.size() << '\n';
  for (const auto& clause : phi.clauses) {
    for (const auto& l : clause) out << (l.negated ? -l.var : l.var) << ' ';
    out << "0\n";
  }
}

json transcript_to_json(const QueryTranscript& t) {
  json values = json::array();
  for (const auto& [b, v] : t.entries) values.push_back({{"b", to_bitstring(b, t.n)}, {"F", v}});
  return {{"n", t.n}, {"query_count", t.query_count}, {"values", values}};
}

QueryTranscript transcript_from_json(const json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    std::vector<std::pair<Index, long>> entries;
    for (const auto& item : doc.at("values")) {
      const auto b = item.at("b").get<std::string>();
      if (static_cast<int>(b.size()) != n) throw ParseError("transcript key '" + b + "' does not have n bits");
      entries.emplace_back(parse_bitstring(b), item.at("F").get<long>());
    }
    return transcript_from_entries(n, std::move(entries));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid transcript: ") + e.what());
  }
}

json table_to_json(const ReconstructionTable& table) {
  const int n = table.n();
  json y1 = json::array();
  json y2 = json::array();
  json y3 = json::array();
  for (int i = 1; i <= n; ++i) {
    y1.push_back({{"i", i}, {"Y", table.y1(i)}});
    for (int j = i + 1; j <= n; ++j) {
      y2.push_back({{"i", i}, {"j", j}, {"Y", table.y2(i, j)}});
      for (int k = j + 1; k <= n; ++k) y3.push_back({{"i", i}, {"j", j}, {"k", k}, {"Y", table.y3(i, j, k)}});
    }
  }
  return {{"n", n}, {"f0", table.f0}, {"y1", y1}, {"y2", y2}, {"y3", y3}};
}

}  // namespace adiabatic
