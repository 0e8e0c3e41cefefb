#include "adiabatic/satquery.hpp"

#include <algorithm>

#include "adiabatic/error.hpp"

namespace adiabatic {
namespace {

bool literal_true(const Literal& lit, Index b, int n) { return bit_at(b, n, lit.var) != static_cast<int>(lit.negated); }

}  // namespace

Formula3CNF normalize(const RawClauses& raw, int n) {
  if (n < 1 || n > kMaxBits) throw DomainError("variable count must be in [1, " + std::to_string(kMaxBits) + "]");
  Formula3CNF out;
  out.n = n;
  for (const auto& clause : raw) {
    if (clause.empty() || clause.size() > 3) throw ContractViolation("clauses must have 1 to 3 literals");
    Clause c;
    bool tautology = false;
    for (int lit : clause) {
      const int var = lit < 0 ? -lit : lit;
      if (var < 1 || var > n) throw DomainError("literal " + std::to_string(lit) + " outside variables 1.." + std::to_string(n));
      const Literal l{var, lit < 0};
      const auto same_var = std::find_if(c.begin(), c.end(), [&](const Literal& x) { return x.var == var; });
      if (same_var == c.end()) {
        c.push_back(l);
      } else if (same_var->negated != l.negated) {
        tautology = true;
      }
    }
    if (!tautology) out.clauses.push_back(std::move(c));
  }
  return out;
}

long count_unsatisfied(const Formula3CNF& phi, Index b) {
  if (b >= dimension_of(phi.n)) throw ShapeError("assignment has more than n bits");
  long count = 0;
  for (const auto& clause : phi.clauses) {
    if (std::none_of(clause.begin(), clause.end(), [&](const Literal& l) { return literal_true(l, b, phi.n); })) ++count;
  }
  return count;
}

long count_unsatisfied(const Formula3CNF& phi, const std::string& b) {
  if (static_cast<int>(b.size()) != phi.n) throw ShapeError("assignment length differs from n");
  return count_unsatisfied(phi, parse_bitstring(b));
}

Oracle formula_oracle(const Formula3CNF& phi) {
  return [phi](Index b) { return count_unsatisfied(phi, b); };
}

// ---------------------------------------------------------------------------
// Queries

std::size_t query_budget(int n) {
  const auto m = static_cast<std::size_t>(n);
  return 1 + m + m * (m - 1) / 2 + (m >= 2 ? m * (m - 1) * (m - 2) / 6 : 0);
}

std::vector<Index> canonical_queries(int n) {
  if (n < 1 || n > kMaxBits) throw DomainError("variable count out of range");
  std::vector<Index> out;
  out.reserve(query_budget(n));
  out.push_back(0);
  for (int i = 1; i <= n; ++i) out.push_back(unit_string(n, i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(unit_string(n, i) | unit_string(n, j));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) out.push_back(unit_string(n, i) | unit_string(n, j) | unit_string(n, k));
    }
  }
  return out;
}

long QueryTranscript::value(Index b) const {
  const auto it = lookup_.find(b);
  if (it == lookup_.end()) throw IncompleteTranscript("transcript has no value for " + to_bitstring(b, n));
  return it->second;
}

QueryTranscript query_low_weight(const Oracle& oracle, int n) {
  QueryTranscript t;
  t.n = n;
  for (Index b : canonical_queries(n)) {
    const long v = oracle(b);
    t.entries.emplace_back(b, v);
    t.lookup_.emplace(b, v);
    ++t.query_count;
  }
  return t;
}

QueryTranscript transcript_from_entries(int n, std::vector<std::pair<Index, long>> entries) {
  QueryTranscript t;
  t.n = n;
  t.entries = std::move(entries);
  t.query_count = t.entries.size();
  for (const auto& [b, v] : t.entries) t.lookup_.emplace(b, v);
  return t;
}

// ---------------------------------------------------------------------------
// Table

ReconstructionTable::ReconstructionTable(int n) : n_(n) {
  if (n < 1 || n > kMaxBits) throw DomainError("variable count out of range");
  const auto m = static_cast<std::size_t>(n);
  y1_.assign(m, 0);
  y2_.assign(m * m, 0);
  y3_.assign(m * m * m, 0);
}

std::size_t ReconstructionTable::idx(int i) const {
  if (i < 1 || i > n_) throw DomainError("variable index out of range");
  return static_cast<std::size_t>(i - 1);
}

std::size_t ReconstructionTable::idx2(int i, int j) const {
  if (i == j) throw DomainError("pair indices must differ");
  if (i > j) std::swap(i, j);
  return idx(i) * static_cast<std::size_t>(n_) + idx(j);
}

std::size_t ReconstructionTable::idx3(int i, int j, int k) const {
  if (i == j || j == k || i == k) throw DomainError("triple indices must differ");
  if (i > j) std::swap(i, j);
  if (j > k) std::swap(j, k);
  if (i > j) std::swap(i, j);
  const auto m = static_cast<std::size_t>(n_);
  return (idx(i) * m + idx(j)) * m + idx(k);
}

long& ReconstructionTable::y2(int i, int j) { return y2_[idx2(i, j)]; }
long ReconstructionTable::y2(int i, int j) const { return y2_[idx2(i, j)]; }
long& ReconstructionTable::y3(int i, int j, int k) { return y3_[idx3(i, j, k)]; }
long ReconstructionTable::y3(int i, int j, int k) const { return y3_[idx3(i, j, k)]; }

bool ReconstructionTable::operator==(const ReconstructionTable& other) const {
  return n_ == other.n_ && f0 == other.f0 && y1_ == other.y1_ && y2_ == other.y2_ && y3_ == other.y3_;
}

ReconstructionTable compute_table(const QueryTranscript& t) {
  const int n = t.n;
  ReconstructionTable table(n);
  auto F = [&](std::initializer_list<int> ones) {
    Index b = 0;
    for (int i : ones) b |= unit_string(n, i);
    return t.value(b);
  };
  table.f0 = F({});
  for (int i = 1; i <= n; ++i) table.y1(i) = F({i}) - table.f0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) table.y2(i, j) = F({i, j}) - F({i}) - F({j}) + table.f0;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        table.y3(i, j, k) = F({i, j, k}) - F({i, j}) - F({i, k}) - F({j, k}) + F({i}) + F({j}) + F({k}) - table.f0;
      }
    }
  }
  return table;
}

long evaluate(const ReconstructionTable& table, Index b) {
  const int n = table.n();
  if (b >= dimension_of(n)) throw ShapeError("assignment has more than n bits");
  std::vector<int> ones;
  for (int i = 1; i <= n; ++i) {
    if (bit_at(b, n, i)) ones.push_back(i);
  }
  long value = table.f0;
  for (std::size_t a = 0; a < ones.size(); ++a) {
    value += table.y1(ones[a]);
    for (std::size_t c = a + 1; c < ones.size(); ++c) {
      value += table.y2(ones[a], ones[c]);
      for (std::size_t d = c + 1; d < ones.size(); ++d) value += table.y3(ones[a], ones[c], ones[d]);
    }
  }
  return value;
}

long evaluate(const ReconstructionTable& table, const std::string& b) {
  if (static_cast<int>(b.size()) != table.n()) throw ShapeError("assignment length differs from n");
  return evaluate(table, parse_bitstring(b));
}

ReconstructionTable clause_type_Y(const Formula3CNF& phi) {
  ReconstructionTable table(phi.n);
  for (const auto& clause : phi.clauses) {
    std::vector<int> pos, neg;
    for (const auto& l : clause) (l.negated ? neg : pos).push_back(l.var);
    auto is_pos = [&](int v) { return std::find(pos.begin(), pos.end(), v) != pos.end(); };
    auto only_negated_are = [&](std::initializer_list<int> vars) {
      if (neg.size() != vars.size()) return false;
      return std::all_of(vars.begin(), vars.end(), [&](int v) { return std::find(neg.begin(), neg.end(), v) != neg.end(); });
    };

    // |XXX| + |XX| + |X|
    if (neg.empty()) ++table.f0;

    // Y_i: +|~X_i XX| + |~X_i X| + |~X_i|  - |X_i XX| - |X_i X| - |X_i|
    for (const auto& l : clause) {
      if (l.negated && only_negated_are({l.var})) ++table.y1(l.var);
      if (!l.negated && neg.empty()) --table.y1(l.var);
    }

    // Y_ij: +|~X_i ~X_j X| + |X_i X_j X| - |~X_j X_i X| - |~X_i X_j X| and the
    // two-literal analogues.
    for (std::size_t a = 0; a < clause.size(); ++a) {
      for (std::size_t b = a + 1; b < clause.size(); ++b) {
        const int i = clause[a].var;
        const int j = clause[b].var;
        long contribution = 0;
        if (only_negated_are({i, j})) ++contribution;
        if (neg.empty() && is_pos(i) && is_pos(j)) ++contribution;
        if (only_negated_are({j}) && is_pos(i)) --contribution;
        if (only_negated_are({i}) && is_pos(j)) --contribution;
        table.y2(i, j) += contribution;
      }
    }

    // Y_ijk: clauses over exactly {i, j, k}; one or three negations count +1,
    // zero or two count -1.
    if (clause.size() == 3) {
      const long sign = (neg.size() % 2 == 1) ? 1 : -1;
      table.y3(clause[0].var, clause[1].var, clause[2].var) += sign;
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Decision

SatDecision decide_sat(const ReconstructionTable& table, int n, int max_vars) {
  if (n != table.n()) throw ShapeError("table is for a different variable count");
  if (n > max_vars) throw CapacityError("exhaustive scan limited to n <= " + std::to_string(max_vars));
  const auto m = static_cast<std::size_t>(n);

  // Depth-first over b in lexicographic order. At depth d (bits 1..d fixed),
  // lin[v] is the change of F from setting bit v given the fixed ones, and
  // pair[u*m + v] the extra pairwise term of setting both u and v. Setting a
  // bit updates them in O((n-d)^2), so the whole scan is O(2^n).
  std::vector<std::vector<long>> lin(m + 1, std::vector<long>(m));
  std::vector<std::vector<long>> pair(m + 1, std::vector<long>(m * m));
  for (int u = 1; u <= n; ++u) {
    lin[0][static_cast<std::size_t>(u - 1)] = table.y1(u);
    for (int v = u + 1; v <= n; ++v) pair[0][static_cast<std::size_t>((u - 1) * n + (v - 1))] = table.y2(u, v);
  }

  SatDecision result;
  Index b = 0;
  // buffer holds the state for the bits still free at `depth`.
  std::function<bool(int, std::size_t, long)> dfs = [&](int depth, std::size_t buffer, long value) -> bool {
    if (depth == n) {
      if (value == 0) {
        result.satisfiable = true;
        result.witness = b;
        return true;
      }
      return false;
    }
    const int var = depth + 1;
    const auto vi = static_cast<std::size_t>(depth);
    if (dfs(depth + 1, buffer, value)) return true;

    const auto next = static_cast<std::size_t>(depth + 1);
    const auto& cur_lin = lin[buffer];
    const auto& cur_pair = pair[buffer];
    auto& new_lin = lin[next];
    auto& new_pair = pair[next];
    for (std::size_t u = vi + 1; u < m; ++u) {
      new_lin[u] = cur_lin[u] + cur_pair[vi * m + u];
      for (std::size_t v = u + 1; v < m; ++v) {
        new_pair[u * m + v] = cur_pair[u * m + v] + table.y3(var, static_cast<int>(u + 1), static_cast<int>(v + 1));
      }
    }
    b |= unit_string(n, var);
    if (dfs(depth + 1, next, value + cur_lin[vi])) return true;
    b &= ~unit_string(n, var);
    return false;
  };
  dfs(0, 0, table.f0);
  return result;
}

std::vector<ReconstructionRow> verify_reconstruction(const Formula3CNF& phi, const ReconstructionTable& table, bool all,
                                                     int max_vars) {
  if (phi.n != table.n()) throw ShapeError("formula and table have different variable counts");
  std::vector<Index> strings;
  if (all) {
    if (phi.n > max_vars) throw CapacityError("full verification limited to n <= " + std::to_string(max_vars));
    strings.resize(dimension_of(phi.n));
    for (Index b = 0; b < strings.size(); ++b) strings[b] = b;
  } else {
    strings = canonical_queries(phi.n);
  }
  std::vector<ReconstructionRow> rows;
  rows.reserve(strings.size());
  for (Index b : strings) {
    const long r = evaluate(table, b);
    const long d = count_unsatisfied(phi, b);
    rows.push_back({b, r, d, r == d});
  }
  return rows;
}

Formula3CNF random_formula(int n, int m, CounterRng& rng) {
  if (n < 1 || m < 0) throw DomainError("random formula needs n >= 1 and m >= 0");
  RawClauses raw;
  for (int c = 0; c < m; ++c) {
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 3))));
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < size) {
      const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    for (int& v : vars) {
      if (rng.below(2)) v = -v;
    }
    raw.push_back(vars);
  }
  return normalize(raw, n);
}

}  // namespace adiabatic
