#include "adiabatic/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "adiabatic/error.hpp"
#include "adiabatic/kernels.hpp"
#include "adiabatic/parallel.hpp"

namespace adiabatic {
namespace {

void require_full_state(const StateVector& state) {
  if (state.basis != Basis::computational) throw ShapeError("gate operations act on computational-basis states");
  if (!is_power_of_two(state.dim()) || state.dim() != dimension_of(state.n)) {
    throw ShapeError("state dimension " + std::to_string(state.dim()) + " is not 2^n");
  }
}

struct PhaseTables {
  std::vector<double> f;
  std::vector<double> h;

  explicit PhaseTables(const ProblemFamily& family)
      : f(family.cost.tabulate()), h(family.initial_cost.tabulate()) {}
};

void step_in_place(std::vector<cplx>& psi, long j, const TrotterPlan& plan, const PhaseTables& tables) {
  const double dt = plan.T / static_cast<double>(plan.r);
  const double frac = static_cast<double>(j) / static_cast<double>(plan.r);
  kernels::phase_rotate(psi, tables.f, dt * frac);
  kernels::walsh_hadamard(psi);
  kernels::phase_rotate(psi, tables.h, dt * (1.0 - frac));
  kernels::walsh_hadamard(psi);
}

void require_step(long j, const TrotterPlan& plan) {
  if (j < 1 || j > plan.r) throw DomainError("step index j must lie in [1, r], got " + std::to_string(j));
}

double state_distance(const StateVector& a, const StateVector& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::norm(a.amplitudes[i] - b.amplitudes[i]);
  return std::sqrt(sum);
}

// exp(-i t H) psi for a Hermitian H through its eigendecomposition.
void apply_exponential(const Eigensystem& sys, double t, std::vector<cplx>& psi) {
  const auto dim = static_cast<Eigen::Index>(psi.size());
  Eigen::Map<Eigen::VectorXcd> v(psi.data(), dim);
  Eigen::VectorXcd coeff = sys.vectors.adjoint() * v;
  for (Eigen::Index k = 0; k < dim; ++k) coeff(k) *= std::exp(cplx(0.0, -t * sys.values[static_cast<std::size_t>(k)]));
  v = sys.vectors * coeff;
}

}  // namespace

void TrotterPlan::validate() const {
  if (!(T > 0.0)) throw DomainError("Trotter plan needs T > 0");
  if (r < 1) throw DomainError("Trotter plan needs r >= 1");
}

StateVector hadamard_transform(StateVector state) {
  require_full_state(state);
  kernels::walsh_hadamard(state.amplitudes);
  return state;
}

StateVector apply_phase(StateVector state, const CostFunction& g, double angle_scale) {
  require_full_state(state);
  if (g.n() != state.n) throw ShapeError("cost function and state have different qubit counts");
  kernels::phase_rotate(state.amplitudes, g.tabulate(), angle_scale);
  return state;
}

StateVector trotter_step(StateVector state, long j, const TrotterPlan& plan) {
  plan.validate();
  require_step(j, plan);
  require_full_state(state);
  if (state.n != plan.family.n) throw ShapeError("state and plan have different qubit counts");
  step_in_place(state.amplitudes, j, plan, PhaseTables(plan.family));
  return state;
}

StateVector trotter_evolve(const TrotterPlan& plan) { return trotter_evolve(plan, uniform_superposition(plan.family.n)); }

StateVector trotter_evolve(const TrotterPlan& plan, StateVector initial) {
  plan.validate();
  require_full_state(initial);
  if (initial.n != plan.family.n) throw ShapeError("state and plan have different qubit counts");
  const PhaseTables tables(plan.family);
  for (long j = 1; j <= plan.r; ++j) step_in_place(initial.amplitudes, j, plan, tables);
  return initial;
}

StateVector exact_step(StateVector state, long j, const TrotterPlan& plan, int dense_limit) {
  plan.validate();
  require_step(j, plan);
  require_full_state(state);
  const auto h0 = build_initial_hamiltonian(plan.family.initial_cost, dense_limit);
  const auto hf = build_final_hamiltonian(plan.family.cost, dense_limit);
  const double s = static_cast<double>(j) / static_cast<double>(plan.r);
  apply_exponential(eigh(interpolate(h0, hf, s)), plan.T / static_cast<double>(plan.r), state.amplitudes);
  return state;
}

StateVector exact_piecewise_evolve(const TrotterPlan& plan, int dense_limit) {
  return exact_piecewise_evolve(plan, uniform_superposition(plan.family.n), dense_limit);
}

StateVector exact_piecewise_evolve(const TrotterPlan& plan, StateVector initial, int dense_limit) {
  plan.validate();
  require_full_state(initial);
  const auto h0 = build_initial_hamiltonian(plan.family.initial_cost, dense_limit);
  const auto hf = build_final_hamiltonian(plan.family.cost, dense_limit);
  const double dt = plan.T / static_cast<double>(plan.r);
  for (long j = 1; j <= plan.r; ++j) {
    const double s = static_cast<double>(j) / static_cast<double>(plan.r);
    apply_exponential(eigh(interpolate(h0, hf, s)), dt, initial.amplitudes);
  }
  return initial;
}

StateVector random_state(int n, CounterRng& rng) {
  StateVector out{n, Basis::computational, std::vector<cplx>(dimension_of(n))};
  for (auto& a : out.amplitudes) a = rng.complex_normal();
  const double norm = out.norm();
  for (auto& a : out.amplitudes) a /= norm;
  return out;
}

StateVector reference_evolve(const ProblemFamily& family, double T, const StateVector& initial, double tolerance) {
  require_full_state(initial);
  IntegrateOptions options;
  options.tolerance = tolerance;
  const auto generator = make_generator(family, make_constant_schedule(T), Backend::dense);
  auto run = propagate(generator, initial.amplitudes, 0.0, 1.0, options);
  return {initial.n, Basis::computational, std::move(run.state)};
}

std::vector<TrotterErrorRow> trotter_error_sweep(const ProblemFamily& family, const std::vector<double>& T_values,
                                                 const std::vector<long>& r_values, const TrotterSweepOptions& options) {
  if (options.sample_states < 1) throw DomainError("sweep needs at least one sample state");
  const CounterRng root(options.seed);
  std::vector<StateVector> samples;
  for (int k = 0; k < options.sample_states; ++k) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(k));
    samples.push_back(random_state(family.n, rng));
  }
  std::vector<TrotterErrorRow> rows;
  for (double T : T_values) {
    std::vector<StateVector> reference(samples.size());
    parallel_for(samples.size(), [&](std::size_t k) {
      reference[k] = reference_evolve(family, T, samples[k], options.reference_tolerance);
    });
    for (long r : r_values) {
      const TrotterPlan plan{family, T, r};
      std::vector<double> errors(samples.size());
      parallel_for(samples.size(), [&](std::size_t k) {
        errors[k] = state_distance(trotter_evolve(plan, samples[k]), reference[k]);
      });
      rows.push_back({r, T, family.n, *std::max_element(errors.begin(), errors.end())});
    }
  }
  return rows;
}

Lemma1Report lemma1_check(const ProblemFamily& family, double T, double delta, const Lemma1Options& options) {
  if (!(T > 0.0)) throw DomainError("T must be positive");
  if (!(delta >= 0.0)) throw DomainError("delta must be non-negative");
  if (options.trials < 1) throw DomainError("need at least one trial");
  const Eigen::MatrixXd h0 = build_initial_hamiltonian(family.initial_cost).real_part();
  const Eigen::MatrixXd hf = build_final_hamiltonian(family.cost).real_part();
  const Eigen::Index dim = h0.rows();

  Lemma1Report report;
  report.n = family.n;
  report.T = T;
  report.delta = delta;
  report.bound = std::sqrt(2.0 * T * delta);
  report.slack = options.slack;
  report.distances.assign(static_cast<std::size_t>(options.trials), 0.0);

  IntegrateOptions integrate_options;
  integrate_options.tolerance = options.integrator_tolerance;
  const CounterRng root(options.seed);

  auto random_hermitian = [&](CounterRng& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
    }
    Eigen::MatrixXcd e = 0.5 * (g + g.adjoint());
    const double norm = operator_norm(HermitianOperator(e, Basis::computational));
    return Eigen::MatrixXcd(e * (norm > 0.0 ? delta / std::numbers::sqrt2 / norm : 0.0));
  };

  parallel_for(report.distances.size(), [&](std::size_t trial) {
    CounterRng rng = root.split(trial);
    const StateVector start = random_state(family.n, rng);
    const Eigen::MatrixXcd e1 = random_hermitian(rng);
    const Eigen::MatrixXcd e2 = random_hermitian(rng);
    const double omega = 2.0 * std::numbers::pi * rng.uniform();

    auto path = [&](bool perturbed) -> Generator {
      return [&, perturbed](double s, std::span<const cplx> psi, std::span<cplx> out) {
        const Eigen::Map<const Eigen::VectorXcd> v(psi.data(), dim);
        Eigen::Map<Eigen::VectorXcd> w(out.data(), dim);
        w = ((1.0 - s) * h0 + s * hf).cast<cplx>() * v;
        if (perturbed) {
          const double t = s * T;
          w += (std::cos(omega * t) * e1 + std::sin(omega * t) * e2) * v;
        }
        w *= T;
      };
    };
    const auto a = propagate(path(false), start.amplitudes, 0.0, 1.0, integrate_options);
    const auto b = propagate(path(true), start.amplitudes, 0.0, 1.0, integrate_options);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.state.size(); ++i) sum += std::norm(a.state[i] - b.state[i]);
    report.distances[trial] = std::sqrt(sum);
  });

  std::vector<double> sorted = report.distances;
  std::sort(sorted.begin(), sorted.end());
  report.max_distance = sorted.back();
  const std::size_t mid = sorted.size() / 2;
  report.median_distance = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  report.all_within = report.max_distance <= report.bound + report.slack;
  return report;
}

}  // namespace adiabatic
