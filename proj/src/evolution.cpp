#include "adiabatic/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

// Boost 1.74's pchip calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "adiabatic/error.hpp"
#include "adiabatic/kernels.hpp"

namespace adiabatic {
namespace {

constexpr cplx kMinusI{0.0, -1.0};

double distance(std::span<const cplx> a, std::span<const cplx> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

void require_state_capacity(int n, int limit) {
  if (n > limit) throw CapacityError("state vectors need n <= " + std::to_string(limit) + ", got n = " + std::to_string(n));
}

std::vector<cplx>& scratch() {
  thread_local std::vector<cplx> buffer;
  return buffer;
}

}  // namespace

double StateVector::norm() const { return std::sqrt(kernels::squared_norm(amplitudes)); }

StateVector uniform_superposition(int n, Basis basis, int state_limit) {
  StateVector out;
  out.n = n;
  out.basis = basis;
  if (basis == Basis::dicke) {
    out.amplitudes.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out.amplitudes[static_cast<std::size_t>(k)] = std::sqrt(binomial(n, k) * std::ldexp(1.0, -n));
    return out;
  }
  if (basis != Basis::computational) throw ShapeError("uniform superposition is built in the computational or dicke basis");
  require_state_capacity(n, state_limit);
  const Index dim = dimension_of(n);
  out.amplitudes.assign(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return out;
}

StateVector basis_state(int n, Index z) {
  require_state_capacity(n, kDefaultStateLimit);
  if (z >= dimension_of(n)) throw DomainError("basis index out of range");
  StateVector out{n, Basis::computational, std::vector<cplx>(dimension_of(n))};
  out.amplitudes[z] = 1.0;
  return out;
}

StateVector expand_dicke(const StateVector& state, int state_limit) {
  if (state.basis != Basis::dicke) throw ShapeError("expected a Dicke-basis state");
  require_state_capacity(state.n, state_limit);
  StateVector out{state.n, Basis::computational, std::vector<cplx>(dimension_of(state.n))};
  for (Index z = 0; z < out.amplitudes.size(); ++z) {
    const int k = hamming_weight(z);
    out.amplitudes[z] = state.amplitudes[static_cast<std::size_t>(k)] / std::sqrt(binomial(state.n, k));
  }
  return out;
}

double overlap(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim() || a.basis != b.basis) throw ShapeError("states live in different spaces");
  cplx inner = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) inner += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::norm(inner);
}

const char* to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::constant:
      return "constant";
    case ScheduleKind::adaptive:
      return "adaptive";
    case ScheduleKind::custom:
      return "custom";
  }
  return "unknown";
}

// The Kronrod error estimate of a sharply peaked 1/g^2 is dominated by
// roundoff long before the value stops improving, so acceptance compares two
// rules of different order instead, and recursion depth stays bounded.
double integrate_delay(const std::function<double(double)>& tau) {
  using boost::math::quadrature::gauss_kronrod;
  const double value = gauss_kronrod<double, 61>::integrate(tau, 0.0, 1.0, 15, 1e-10);
  const double check = gauss_kronrod<double, 31>::integrate(tau, 0.0, 1.0, 15, 1e-10);
  if (!std::isfinite(value) || std::abs(value - check) > 1e-8 * std::abs(value)) {
    throw AccuracyError("delay quadrature did not converge (estimates " + std::to_string(value) + " and " +
                        std::to_string(check) + ")");
  }
  return value;
}

Schedule make_constant_schedule(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("constant schedule needs T > 0");
  return {ScheduleKind::constant, [T](double) { return T; }, T, T};
}

Schedule make_adaptive_schedule(std::function<double(double)> gap_fn, double c) {
  if (!(c > 0.0)) throw DomainError("adaptivity constant c must be positive");
  if (!gap_fn) throw ContractViolation("adaptive schedule needs a gap function");
  auto tau = [gap_fn = std::move(gap_fn), c](double s) {
    const double g = gap_fn(s);
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw SingularSchedule("gap vanishes at s = " + std::to_string(s) + "; adaptive delay is undefined");
    }
    return c / (g * g);
  };
  const double total = integrate_delay(tau);
  return {ScheduleKind::adaptive, tau, total, c};
}

Schedule make_custom_schedule(std::function<double(double)> tau) {
  if (!tau) throw ContractViolation("custom schedule needs a delay function");
  auto checked = [tau = std::move(tau)](double s) {
    const double v = tau(s);
    if (!(v > 0.0) || !std::isfinite(v)) throw SingularSchedule("delay must be positive, violated at s = " + std::to_string(s));
    return v;
  };
  const double total = integrate_delay(checked);
  return {ScheduleKind::custom, checked, total, 0.0};
}

double closed_form_search_delay(int n) {
  if (n < 1) throw DomainError("search delay needs n >= 1");
  const double dim = std::ldexp(1.0, n);
  const double root = std::sqrt(dim - 1.0);
  return dim * std::atan(root) / root;
}

SearchDelayRow compare_search_delay(int n, double c) {
  const auto schedule = make_adaptive_schedule([n](double s) { return closed_form_search_gap(n, s); }, c);
  const double exact = closed_form_search_delay(n);
  return {n, c, schedule.total_delay, c * exact, std::abs(schedule.total_delay - c * exact) / (c * exact),
          exact / std::sqrt(std::ldexp(1.0, n))};
}

std::function<double(double)> gap_function(const ProblemFamily& family, Backend backend, int points, int dense_limit) {
  if (std::holds_alternative<SearchParams>(family.params)) {
    const int n = family.n;
    return [n](double s) { return closed_form_search_gap(n, s); };
  }
  GapOptions options;
  options.refine = false;
  options.dense_limit = dense_limit;
  const auto grid = uniform_grid(std::max(points, 4));
  auto report = gap_curve(family, grid, backend, options);
  boost::math::interpolators::pchip<std::vector<double>> spline(std::move(report.s_grid), std::move(report.gap));
  return [spline](double s) { return spline(std::clamp(s, 0.0, 1.0)); };
}

double constant_delay_from_report(const SpectralReport& report, double c) {
  if (!(report.g_min > 0.0)) throw SingularSchedule("minimum gap is zero");
  return c * report.delta_max / (report.g_min * report.g_min);
}

// ---------------------------------------------------------------------------
// Hamiltonian application

FullSpaceHamiltonian::FullSpaceHamiltonian(const ProblemFamily& family, int state_limit) : n_(family.n) {
  require_state_capacity(n_, state_limit);
  validate_initial_cost(family.initial_cost, state_limit);
  f_ = family.cost.tabulate(state_limit);
  h_ = family.initial_cost.tabulate(state_limit);
}

void FullSpaceHamiltonian::apply_initial(std::span<const cplx> psi, std::span<cplx> out) const {
  std::copy(psi.begin(), psi.end(), out.begin());
  kernels::walsh_hadamard(out);
  kernels::diagonal_multiply(h_, out, out);
  kernels::walsh_hadamard(out);
}

void FullSpaceHamiltonian::apply_final(std::span<const cplx> psi, std::span<cplx> out) const {
  kernels::diagonal_multiply(f_, psi, out);
}

void FullSpaceHamiltonian::apply(double s, std::span<const cplx> psi, std::span<cplx> out) const {
  auto& tmp = scratch();
  tmp.resize(psi.size());
  apply_initial(psi, tmp);
  apply_final(psi, out);
  for (auto& v : out) v *= s;
  kernels::axpy(1.0 - s, tmp, out);
}

// ---------------------------------------------------------------------------
// Integration

std::vector<cplx> rk4_fixed(const Generator& generator, std::vector<cplx> psi, double s0, double s1, long steps,
                            double* norm_drift) {
  if (steps < 1) throw DomainError("step count must be positive");
  const std::size_t dim = psi.size();
  std::vector<cplx> k1(dim), k2(dim), k3(dim), k4(dim), stage(dim);
  const double h = (s1 - s0) / static_cast<double>(steps);
  const double norm0 = std::sqrt(kernels::squared_norm(psi));
  double drift = 0.0;
  for (long j = 0; j < steps; ++j) {
    const double s = s0 + (s1 - s0) * static_cast<double>(j) / static_cast<double>(steps);
    generator(s, psi, k1);
    stage = psi;
    kernels::axpy(kMinusI * (h / 2), k1, stage);
    generator(s + h / 2, stage, k2);
    stage = psi;
    kernels::axpy(kMinusI * (h / 2), k2, stage);
    generator(s + h / 2, stage, k3);
    stage = psi;
    kernels::axpy(kMinusI * h, k3, stage);
    generator(s + h, stage, k4);
    kernels::axpy(kMinusI * (h / 6), k1, psi);
    kernels::axpy(kMinusI * (h / 3), k2, psi);
    kernels::axpy(kMinusI * (h / 3), k3, psi);
    kernels::axpy(kMinusI * (h / 6), k4, psi);
    drift = std::max(drift, std::abs(std::sqrt(kernels::squared_norm(psi)) - norm0));
  }
  if (norm_drift) *norm_drift = drift;
  return psi;
}

PropagationResult propagate(const Generator& generator, std::vector<cplx> initial, double s0, double s1,
                            const IntegrateOptions& options) {
  long steps = std::max(1L, options.initial_steps);
  double drift = 0.0;
  auto previous = rk4_fixed(generator, initial, s0, s1, steps, &drift);
  double change = 0.0;
  while (true) {
    steps *= 2;
    if (steps > options.max_steps) {
      throw AccuracyError("integration did not converge within " + std::to_string(options.max_steps) +
                          " steps (last change " + std::to_string(change) + ", norm drift " + std::to_string(drift) + ")");
    }
    auto current = rk4_fixed(generator, initial, s0, s1, steps, &drift);
    change = distance(current, previous);
    if (change < options.tolerance && drift <= options.tolerance) {
      return {std::move(current), steps, drift, change};
    }
    previous = std::move(current);
  }
}

namespace {

Generator dicke_generator_impl(const ProblemFamily& family, const Schedule& schedule) {
  if (!family.supports_dicke()) throw UnsupportedFamily("family " + family.describe() + " has no weight-symmetric reduction");
  const int n = family.n;
  const auto profile = family.cost.weight_profile();
  std::vector<double> flip(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) flip[static_cast<std::size_t>(k)] = 0.5 * std::sqrt((k + 1.0) * (n - k));
  auto tau = schedule.tau;
  return [n, profile, flip, tau](double s, std::span<const cplx> psi, std::span<cplx> out) {
    const double t = tau(s);
    const double a = 1.0 - s;
    for (int k = 0; k <= n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      cplx v = (a * n / 2.0 + s * profile[ku]) * psi[ku];
      if (k > 0) v -= a * flip[ku - 1] * psi[ku - 1];
      if (k < n) v -= a * flip[ku] * psi[ku + 1];
      out[ku] = t * v;
    }
  };
}

Generator full_generator_impl(const ProblemFamily& family, const Schedule& schedule, int state_limit) {
  auto ham = std::make_shared<FullSpaceHamiltonian>(family, state_limit);
  auto tau = schedule.tau;
  return [ham, tau](double s, std::span<const cplx> psi, std::span<cplx> out) {
    ham->apply(s, psi, out);
    const double t = tau(s);
    for (auto& v : out) v *= t;
  };
}

}  // namespace

Generator make_generator(const ProblemFamily& family, const Schedule& schedule, Backend backend, int state_limit) {
  if (!schedule.tau) throw ContractViolation("schedule has no delay function");
  return backend == Backend::dicke ? dicke_generator_impl(family, schedule)
                                   : full_generator_impl(family, schedule, state_limit);
}

namespace {

// Probability mass on the minimizers of the final cost (the ground space of H(1)).
double ground_space_weight(const ProblemFamily& family, const StateVector& state) {
  std::vector<double> f;
  if (state.basis == Basis::dicke) {
    f = family.cost.weight_profile();
  } else {
    f = family.cost.tabulate(state.n);
  }
  const double fmin = *std::min_element(f.begin(), f.end());
  double weight = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f[i] - fmin) <= 1e-12) weight += std::norm(state.amplitudes[i]);
  }
  return weight;
}

}  // namespace

EvolutionResult integrate(const ProblemFamily& family, const Schedule& schedule, Backend backend,
                          const IntegrateOptions& options) {
  const Basis basis = backend == Backend::dicke ? Basis::dicke : Basis::computational;
  const StateVector start = uniform_superposition(family.n, basis, options.state_limit);
  const Generator generator = make_generator(family, schedule, backend, options.state_limit);
  auto run = propagate(generator, start.amplitudes, 0.0, 1.0, options);

  EvolutionResult result;
  result.family = family.describe();
  result.schedule = to_string(schedule.kind);
  result.total_delay = schedule.total_delay;
  result.final_state = {family.n, basis, std::move(run.state)};
  result.norm_drift = run.norm_drift;
  result.steps = run.steps;
  result.step_change = run.step_change;
  result.overlap_ground = ground_space_weight(family, result.final_state);
  return result;
}

StateVector ground_state(const ProblemFamily& family, double s, Backend backend, int dense_limit) {
  Eigensystem sys;
  StateVector out;
  out.n = family.n;
  if (backend == Backend::dicke) {
    sys = eigh(build_dicke_reduction(family, s));
    out.basis = Basis::dicke;
  } else {
    const auto h0 = build_initial_hamiltonian(family.initial_cost, dense_limit);
    const auto hf = build_final_hamiltonian(family.cost, dense_limit);
    sys = eigh(interpolate(h0, hf, s));
    out.basis = Basis::computational;
  }
  // The reduction alone misses levels outside the symmetric sector.
  const auto [l0, l1] = two_lowest(family, s, backend, dense_limit);
  if (l1 - l0 < 1e-12) {
    throw DegenerateGround("ground state of H(" + std::to_string(s) + ") is degenerate");
  }
  const auto col = sys.vectors.col(0);
  out.amplitudes.assign(col.data(), col.data() + col.size());
  return out;
}

double success_probability(const EvolutionResult& result, const StateVector& target) {
  return overlap(target, result.final_state);
}

}  // namespace adiabatic
