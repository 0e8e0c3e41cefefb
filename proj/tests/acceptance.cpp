// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "adiabatic/evolution.hpp"
#include "adiabatic/lower_bound.hpp"
#include "adiabatic/random.hpp"
#include "adiabatic/satquery.hpp"
#include "adiabatic/spectral.hpp"
#include "adiabatic/trotter.hpp"
#include "oracles.hpp"

using namespace adiabatic;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) detail = what;
    pass = pass && condition;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

long binomial_count(int n, int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return k > n ? 0 : c;
}

Outcome search_gap_closed_form() {
  Outcome o;
  const auto grid = uniform_grid(101);
  double worst = 0;
  for (int n = 2; n <= 10; ++n) {
    const Index u = (dimension_of(n) * 5) / 7;
    const auto report = gap_curve(make_family(n, SearchParams{u}), grid, Backend::dense);
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(report.gap[i] - oracle::search_gap(n, grid[i])));
    o.require(std::abs(report.gap[50] - std::pow(2.0, -n / 2.0)) < 1e-10, "gap at s = 0.5 off for n = " + std::to_string(n));
    o.require(std::abs(report.g_min - std::pow(2.0, -n / 2.0)) < 1e-10, "g_min off for n = " + std::to_string(n));
    o.require(std::abs(report.s_star - 0.5) < 1e-6, "s_star off for n = " + std::to_string(n));
  }
  o.require(worst < 1e-10, "gap deviates by " + fmt(worst));
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

Outcome hamming_gap() {
  Outcome o;
  const auto grid = uniform_grid(101);
  const auto small = gap_curve(make_family(2, HammingWeightParams{}), grid, Backend::dense);
  const auto large = gap_curve(make_family(12, HammingWeightParams{}), grid, Backend::dicke);
  double worst = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double s = grid[i];
    const double g = std::sqrt(2 * s * s - 2 * s + 1);
    worst = std::max({worst, std::abs(small.gap[i] - g), std::abs(large.gap[i] - g), std::abs(small.gap[i] - large.gap[i])});
  }
  o.require(worst < 1e-10, "gap deviates by " + fmt(worst));
  // n = 2 is also checked against the explicit matrix.
  for (double s : grid) o.require(std::abs(oracle::gap(make_family(2, HammingWeightParams{}), s) - small.gap[static_cast<std::size_t>(std::lround(s * 100))]) < 1e-10, "oracle mismatch");
  for (const auto* r : {&small, &large}) {
    o.require(std::abs(r->g_min - 1 / std::sqrt(2.0)) < 1e-10, "g_min " + fmt(r->g_min));
    o.require(std::abs(r->s_star - 0.5) < 1e-6, "s_star " + fmt(r->s_star));
  }
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

Outcome search_delay() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= 12; ++n) {
    const double gap_only = integrate_delay([n](double s) { return 1 / std::pow(oracle::search_gap(n, s), 2); });
    const double rel = std::abs(gap_only - oracle::search_delay(n)) / oracle::search_delay(n);
    worst = std::max(worst, rel);
    const auto row = compare_search_delay(n, 1.0);
    worst = std::max(worst, std::abs(row.quadrature - oracle::search_delay(n)) / oracle::search_delay(n));
  }
  o.require(worst < 1e-8, "relative error " + fmt(worst));
  const auto row = compare_search_delay(20, 1.0);
  const double ratio = row.quadrature / std::sqrt(std::ldexp(1.0, 20));
  const double off = std::abs(ratio / (std::numbers::pi / 2) - 1);
  o.require(off < 0.01, "ratio at n = 20 is " + fmt(ratio));
  if (o.pass) o.detail = "max relative error " + fmt(worst) + ", ratio(n=20)/(pi/2) - 1 = " + fmt(off);
  return o;
}

Outcome quadratic_speedup() {
  Outcome o;
  const int n = 6;
  double worst_adaptive = 1, best_constant_gap = 1;
  bool constant_loses = false;
  for (Index u : {Index{0}, Index{27}, Index{63}}) {
    const auto family = make_family(n, SearchParams{u});
    const auto schedule = make_adaptive_schedule(gap_function(family, Backend::dense), 5.0);
    o.require(schedule.total_delay <= 20 * std::sqrt(64.0), "adaptive delay " + fmt(schedule.total_delay));
    const auto adaptive = integrate(family, schedule, Backend::dense);
    const double pa = overlap(adaptive.final_state, basis_state(n, u));
    worst_adaptive = std::min(worst_adaptive, pa);
    o.require(pa >= 0.9, "adaptive overlap " + fmt(pa));
    const auto constant = integrate(family, make_constant_schedule(schedule.total_delay), Backend::dense);
    const double pc = overlap(constant.final_state, basis_state(n, u));
    best_constant_gap = std::min(best_constant_gap, pc);
    constant_loses = constant_loses || (pc < 0.9 && pc < pa);
  }
  o.require(constant_loses, "constant schedule never below 0.9");
  if (o.pass) o.detail = "adaptive >= " + fmt(worst_adaptive) + ", constant min " + fmt(best_constant_gap);
  return o;
}

Outcome perturbed_gap() {
  Outcome o;
  std::vector<double> g(25, 0.0);
  for (int n = 8; n <= 24; ++n) {
    const auto row = min_gap_row(make_spike_family(n), Backend::dicke);
    g[static_cast<std::size_t>(n)] = row.g_min;
    o.require(row.g_min <= (n + 1) * std::pow(2.0, -(n - 3) / 2.0), "bound violated at n = " + std::to_string(n));
  }
  double worst_ratio = 0;
  for (int n = 12; n + 2 <= 24; ++n) {
    const double ratio = g[static_cast<std::size_t>(n + 2)] / g[static_cast<std::size_t>(n)];
    worst_ratio = std::max(worst_ratio, ratio);
    o.require(ratio <= 0.9, "ratio " + fmt(ratio) + " at n = " + std::to_string(n));
  }
  double worst_agreement = 0;
  const auto grid = uniform_grid(11);
  for (int n = 8; n <= 10; ++n) {
    const auto family = make_spike_family(n);
    const auto dense = min_gap(family, Backend::dense);
    worst_agreement = std::max(worst_agreement, std::abs(dense.g_min - g[static_cast<std::size_t>(n)]));
    const auto dc = gap_curve(family, grid, Backend::dense);
    const auto kc = gap_curve(family, grid, Backend::dicke);
    for (std::size_t i = 0; i < grid.size(); ++i) worst_agreement = std::max(worst_agreement, std::abs(dc.gap[i] - kc.gap[i]));
  }
  o.require(worst_agreement < 1e-10, "dense vs dicke " + fmt(worst_agreement));
  if (o.pass) {
    o.detail = "g_min(24) " + fmt(g[24]) + ", max ratio " + fmt(worst_ratio) + ", dense vs dicke " + fmt(worst_agreement);
  }
  return o;
}

Outcome adiabatic_failure() {
  Outcome o;
  const int n = 8;
  const double T = 10.0 * n * n;
  const auto spike = integrate(make_spike_family(n), make_constant_schedule(T), Backend::dense);
  const auto plain = integrate(make_family(n, HammingWeightParams{}), make_constant_schedule(T), Backend::dense);
  // Ground state of the spike problem at s = 1 is 1^n, of the plain problem 0^n.
  const double ps = overlap(spike.final_state, basis_state(n, dimension_of(n) - 1));
  const double pp = overlap(plain.final_state, basis_state(n, 0));
  o.require(std::abs(ps - spike.overlap_ground) < 1e-12 && std::abs(pp - plain.overlap_ground) < 1e-12, "ground overlap mismatch");
  o.require(ps < 0.5, "spike overlap " + fmt(ps));
  o.require(pp >= 0.99, "plain overlap " + fmt(pp));
  if (o.pass) o.detail = "spike " + fmt(ps) + ", unperturbed " + fmt(pp);
  return o;
}

Outcome perturbation_bound() {
  Outcome o;
  const double T = 5, delta = 0.01;
  const auto report = lemma1_check(make_family(3, HammingWeightParams{}), T, delta);
  o.require(report.distances.size() == 100, "trial count " + std::to_string(report.distances.size()));
  double worst = 0;
  for (double d : report.distances) worst = std::max(worst, d);
  o.require(worst <= std::sqrt(2 * T * delta) + 1e-4, "distance " + fmt(worst));
  o.require(report.all_within, "report flags a violation");
  if (o.pass) o.detail = "max distance " + fmt(worst) + " <= " + fmt(std::sqrt(2 * T * delta));
  return o;
}

Outcome trotter_convergence() {
  Outcome o;
  std::vector<long> r_values;
  for (long r = 64; r <= 4096; r *= 2) r_values.push_back(r);
  const auto rows = trotter_error_sweep(make_family(4, HammingWeightParams{}), {10.0}, r_values);
  double lo = 1e9, hi = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = rows[i - 1].error_vs_reference / rows[i].error_vs_reference;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  o.require(rows.size() == r_values.size() && lo >= 1.5 && hi <= 2.5, "ratios in [" + fmt(lo) + ", " + fmt(hi) + "]");
  double worst = 0;
  CounterRng rng(8);
  for (int n : {2, 4, 6}) {
    const auto family = make_spike_family(n);
    const TrotterPlan plan{family, 10.0, 16};
    const Eigen::MatrixXd h0 = oracle::initial_hamiltonian(family);
    const Eigen::MatrixXd hf = oracle::diag(oracle::values(family.cost));
    const double dt = plan.T / static_cast<double>(plan.r);
    for (long j = 1; j <= plan.r; ++j) {
      const auto psi = random_state(n, rng);
      const double s = static_cast<double>(j) / static_cast<double>(plan.r);
      const auto expected = oracle::evolve(h0, dt * (1 - s), oracle::evolve(hf, dt * s, psi.amplitudes));
      worst = std::max(worst, oracle::distance(trotter_step(psi, j, plan).amplitudes, expected));
    }
  }
  o.require(worst < 1e-10, "step deviates by " + fmt(worst));
  if (o.pass) o.detail = "ratios in [" + fmt(lo) + ", " + fmt(hi) + "], step deviation " + fmt(worst);
  return o;
}

Outcome reconstruction() {
  Outcome o;
  CounterRng rng(500);
  long satisfiable = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 12;
    const int m = static_cast<int>(rng.below(31));
    const auto phi = random_formula(n, m, rng);
    const auto transcript = query_low_weight(formula_oracle(phi), n);
    const auto expected = static_cast<std::size_t>(1 + n + binomial_count(n, 2) + binomial_count(n, 3));
    o.require(transcript.query_count == expected, "query count at trial " + std::to_string(trial));
    const auto table = compute_table(transcript);
    o.require(table == clause_type_Y(phi), "Y paths differ at trial " + std::to_string(trial));
    bool any_zero = false;
    for (Index b = 0; b < dimension_of(n); ++b) {
      const long direct = oracle::unsatisfied(phi, b);
      if (evaluate(table, b) != direct) o.require(false, "F differs at trial " + std::to_string(trial));
      any_zero = any_zero || direct == 0;
    }
    const auto decision = decide_sat(table, n);
    o.require(decision.satisfiable == any_zero, "decision differs at trial " + std::to_string(trial));
    if (decision.witness) o.require(oracle::unsatisfied(phi, *decision.witness) == 0, "bad witness");
    satisfiable += any_zero;
  }
  if (o.pass) o.detail = "500 formulas, " + std::to_string(satisfiable) + " satisfiable";
  return o;
}

Outcome matching_distance_bound() {
  Outcome o;
  CounterRng rng(10);
  double tightest = 1e9;
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 1 + static_cast<int>(rng.below(48));
    auto random_hermitian = [&] {
      Eigen::MatrixXcd m(dim, dim);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m(i, j) = rng.complex_normal();
      }
      return HermitianOperator(Eigen::MatrixXcd(0.5 * (m + m.adjoint())), Basis::computational);
    };
    const auto a = random_hermitian();
    const auto b = random_hermitian();
    const double slack = operator_norm(a - b) - matching_distance(eigenvalues(a), eigenvalues(b));
    tightest = std::min(tightest, slack);
    o.require(slack >= -1e-9, "random pair violates the bound");
  }
  for (int n = 4; n <= 10; ++n) {
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9, reduced_critical_point(n)}) {
      const auto A = build_A(n, s);
      const auto B = build_B(A);
      const double slack = operator_norm(A - B) - matching_distance(eigenvalues(A), eigenvalues(B));
      tightest = std::min(tightest, slack);
      o.require(slack >= -1e-9, "A/B violates the bound at n = " + std::to_string(n));
    }
  }
  // |<1|v0(s)>| from the explicit single-qubit matrix, raised to the n-th power.
  double worst_overlap = 0;
  for (double s : uniform_grid(101)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(oracle::hamiltonian(make_family(1, HammingWeightParams{}), s));
    const double one = std::abs(solver.eigenvectors()(1, 0));
    for (int n = 1; n <= 24; ++n) {
      const double value = std::pow(one, n);
      o.require(std::abs(value - ground_overlap_with_ones(n, s)) < 1e-12, "overlap mismatch");
      const double excess = value / std::pow(2.0, -n / 2.0) - 1;
      worst_overlap = std::max(worst_overlap, excess);
      o.require(excess <= 1e-12, "overlap bound fails at n = " + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "min slack " + fmt(tightest) + ", overlap/2^(-n/2) - 1 <= " + fmt(worst_overlap);
  return o;
}

struct Criterion {
  const char* id;
  const char* name;
  std::function<Outcome()> run;
  double time_limit;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "search gap closed form", search_gap_closed_form, 30},
      {"AC2", "hamming weight gap", hamming_gap, 0},
      {"AC3", "search delay integral", search_delay, 0},
      {"AC4", "adaptive beats constant schedule", quadratic_speedup, 0},
      {"AC5", "perturbed problem exponential gap", perturbed_gap, 60},
      {"AC6", "adiabatic failure at polynomial delay", adiabatic_failure, 0},
      {"AC7", "perturbation bound", perturbation_bound, 0},
      {"AC8", "trotter convergence", trotter_convergence, 0},
      {"AC9", "3-CNF reconstruction", reconstruction, 60},
      {"AC10", "matching distance", matching_distance_bound, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds >= c.time_limit) outcome.require(false, "took " + fmt(seconds) + " s");
    failures += !outcome.pass;
    std::printf("%s %s  %s (%.2f s%s) %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.time_limit > 0 ? (" < " + fmt(c.time_limit) + " s").c_str() : "", outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
