#pragma once

// Reconstruction of the unsatisfied-clause count F(b) of a 3CNF formula from
// its values on the 1 + n + C(n,2) + C(n,3) strings of Hamming weight <= 3.
//
// Bit strings use the library convention: variable x_i is bit z_i, the
// (n - i)-th bit of the index, so index order is lexicographic order.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "adiabatic/bits.hpp"
#include "adiabatic/random.hpp"

namespace adiabatic {

struct Literal {
  /// 1-based variable index.
  int var;
  bool negated;

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

/// Multiset of clauses with 1-3 literals over distinct variables.
struct Formula3CNF {
  int n = 0;
  std::vector<Clause> clauses;
};

/// Clauses given as DIMACS-style signed variable indices.
using RawClauses = std::vector<std::vector<int>>;

/// Collapses repeated literals, drops tautologies, keeps multiplicity and
/// literal order otherwise. Throws DomainError on out-of-range indices and
/// ContractViolation on clauses with 0 or more than 3 literals.
Formula3CNF normalize(const RawClauses& raw, int n);

long count_unsatisfied(const Formula3CNF& phi, Index b);
long count_unsatisfied(const Formula3CNF& phi, const std::string& b);

/// Black-box access to F.
using Oracle = std::function<long(Index)>;

Oracle formula_oracle(const Formula3CNF& phi);

struct QueryTranscript {
  int n = 0;
  /// (b, F(b)) in canonical order: 0^n, e^i, e^{ij}, e^{ijk}, each lexicographic in the indices.
  std::vector<std::pair<Index, long>> entries;
  std::size_t query_count = 0;

  /// Throws IncompleteTranscript when b was not queried.
  long value(Index b) const;

 private:
  friend QueryTranscript query_low_weight(const Oracle&, int);
  friend QueryTranscript transcript_from_entries(int, std::vector<std::pair<Index, long>>);
  std::unordered_map<Index, long> lookup_;
};

/// The canonical weight <= 3 query set.
std::vector<Index> canonical_queries(int n);

/// 1 + n + C(n,2) + C(n,3).
std::size_t query_budget(int n);

/// Calls the oracle exactly once per canonical query.
QueryTranscript query_low_weight(const Oracle& oracle, int n);

/// Rebuilds a transcript from stored entries (e.g. parsed JSON); keys need
/// not be complete.
QueryTranscript transcript_from_entries(int n, std::vector<std::pair<Index, long>> entries);

/// F(0^n) and the coefficients Y_i, Y_ij, Y_ijk (1-based, symmetric access).
class ReconstructionTable {
 public:
  explicit ReconstructionTable(int n);

  int n() const { return n_; }
  long f0 = 0;

  long& y1(int i) { return y1_[idx(i)]; }
  long y1(int i) const { return y1_[idx(i)]; }
  long& y2(int i, int j);
  long y2(int i, int j) const;
  long& y3(int i, int j, int k);
  long y3(int i, int j, int k) const;

  bool operator==(const ReconstructionTable& other) const;

 private:
  std::size_t idx(int i) const;
  std::size_t idx2(int i, int j) const;
  std::size_t idx3(int i, int j, int k) const;

  int n_;
  std::vector<long> y1_;
  std::vector<long> y2_;
  std::vector<long> y3_;
};

/// Y_i = F(e^i) - F(0), Y_ij and Y_ijk by the alternating sums over sub-strings.
ReconstructionTable compute_table(const QueryTranscript& transcript);

/// F(0) + sum over I of Y_i + pairs + triples, I = {i : b_i = 1}.
long evaluate(const ReconstructionTable& table, Index b);
long evaluate(const ReconstructionTable& table, const std::string& b);

/// Y coefficients counted from clause types (|X_iXX|, |~X_i X_j X|, ...).
ReconstructionTable clause_type_Y(const Formula3CNF& phi);

struct SatDecision {
  bool satisfiable = false;
  std::optional<Index> witness;
};

/// Lexicographically first b with evaluate(table, b) = 0. Throws CapacityError for n > max_vars.
SatDecision decide_sat(const ReconstructionTable& table, int n, int max_vars = 24);

struct ReconstructionRow {
  Index b;
  long reconstructed;
  long direct;
  bool match;
};

/// Reconstructed vs directly counted F over all 2^n strings (all = true,
/// capped at max_vars) or over the canonical query strings.
std::vector<ReconstructionRow> verify_reconstruction(const Formula3CNF& phi, const ReconstructionTable& table, bool all,
                                                     int max_vars = 24);

/// Uniform random formula: m clauses, each of 1..3 distinct variables with random signs.
Formula3CNF random_formula(int n, int m, CounterRng& rng);

// DIMACS-style text: optional "c" comments, "p cnf <n> <m>", clauses of 1-3
// signed integers each terminated by 0.
Formula3CNF parse_dimacs(std::istream& in);
Formula3CNF load_dimacs(const std::string& path);
void write_dimacs(std::ostream& out, const Formula3CNF& phi);

nlohmann::json transcript_to_json(const QueryTranscript& transcript);
QueryTranscript transcript_from_json(const nlohmann::json& doc);
nlohmann::json table_to_json(const ReconstructionTable& table);

}  // namespace adiabatic
