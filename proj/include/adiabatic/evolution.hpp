#pragma once

// Schrödinger evolution in the interpolation parameter s:
//   d psi / ds = -i tau(s) H(s) psi,   psi(0) = ground state of H_0,
// under constant or gap-adaptive delay schedules.

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "adiabatic/hamiltonian.hpp"
#include "adiabatic/spectral.hpp"

namespace adiabatic {

using cplx = std::complex<double>;

struct StateVector {
  int n = 0;
  /// computational (2^n amplitudes) or dicke (n+1 amplitudes, weight order).
  Basis basis = Basis::computational;
  std::vector<cplx> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

/// Uniform superposition over n qubits, i.e. W^{(x)n}|0^n>.
StateVector uniform_superposition(int n, Basis basis = Basis::computational, int state_limit = kDefaultStateLimit);
StateVector basis_state(int n, Index z);
/// |D_k> amplitudes mapped back onto the 2^n computational basis.
StateVector expand_dicke(const StateVector& state, int state_limit = kDefaultStateLimit);

/// |<a|b>|^2. Throws ShapeError on mismatched dimension or basis.
double overlap(const StateVector& a, const StateVector& b);

enum class ScheduleKind { constant, adaptive, custom };

const char* to_string(ScheduleKind kind);

struct Schedule {
  ScheduleKind kind = ScheduleKind::constant;
  std::function<double(double)> tau;
  double total_delay = 0.0;
  /// Adaptivity constant for adaptive schedules, T for constant ones.
  double parameter = 0.0;
};

Schedule make_constant_schedule(double T);

/// tau(s) = c / gap(s)^2. Throws SingularSchedule if gap <= 0 at a quadrature node.
Schedule make_adaptive_schedule(std::function<double(double)> gap_fn, double c);

Schedule make_custom_schedule(std::function<double(double)> tau);

/// Adaptive Gauss-Kronrod quadrature of tau over [0,1]; the 61- and 31-point
/// rules must agree to 1e-8 relative or AccuracyError is thrown.
double integrate_delay(const std::function<double(double)>& tau);

/// 2^n arctan(sqrt(2^n - 1)) / sqrt(2^n - 1), the integral of 1/g(s)^2 for search.
double closed_form_search_delay(int n);

struct SearchDelayRow {
  int n;
  double c;
  /// Total delay of the adaptive schedule c / g(s)^2 by quadrature.
  double quadrature;
  /// c times closed_form_search_delay(n).
  double closed_form;
  double relative_error;
  /// closed_form_search_delay(n) / sqrt(2^n), which tends to pi/2.
  double ratio_to_sqrt_dim;
};

SearchDelayRow compare_search_delay(int n, double c);

/// Gap function for adaptive schedules: the closed form for search families,
/// otherwise a shape-preserving interpolant of a numerically computed gap curve
/// on `points` grid points.
std::function<double(double)> gap_function(const ProblemFamily& family, Backend backend, int points = 401,
                                           int dense_limit = kDefaultDenseLimit);

/// c * delta_max / g_min^2.
double constant_delay_from_report(const SpectralReport& report, double c);

struct IntegrateOptions {
  long initial_steps = 64;
  /// Accepted when doubling the step count changes the final state by less
  /// than this in 2-norm, and the norm drift is below it too.
  double tolerance = 1e-6;
  long max_steps = 1L << 20;
  int state_limit = kDefaultStateLimit;
};

struct EvolutionResult {
  std::string family;
  std::string schedule;
  double total_delay = 0.0;
  StateVector final_state;
  /// max | ||psi|| - 1 | over the accepted run.
  double norm_drift = 0.0;
  /// Weight of psi(1) on the ground space of H(1) = H_f, which is
  /// |<ground(1)|psi(1)>|^2 when the ground state is unique.
  double overlap_ground = 0.0;
  long steps = 0;
  /// || psi_steps - psi_{steps/2} || at acceptance.
  double step_change = 0.0;
};

/// Fixed-step RK4 with step doubling until converged. Throws AccuracyError
/// when max_steps is reached first.
EvolutionResult integrate(const ProblemFamily& family, const Schedule& schedule, Backend backend,
                          const IntegrateOptions& options = {});

/// Lowest eigenvector of H(s), phase-normalized. Throws DegenerateGround
/// when the gap is below 1e-12.
StateVector ground_state(const ProblemFamily& family, double s, Backend backend, int dense_limit = kDefaultDenseLimit);

/// |<target|final state>|^2.
double success_probability(const EvolutionResult& result, const StateVector& target);

/// out = G(s) psi for a Hermitian generator G(s); the equation solved is
/// d psi / ds = -i G(s) psi.
using Generator = std::function<void(double s, std::span<const cplx> psi, std::span<cplx> out)>;

struct PropagationResult {
  std::vector<cplx> state;
  long steps = 0;
  double norm_drift = 0.0;
  double step_change = 0.0;
};

/// tau(s) H(s) for the schedule, in the full space (dense backend, matrix-free)
/// or in the Dicke basis.
Generator make_generator(const ProblemFamily& family, const Schedule& schedule, Backend backend,
                         int state_limit = kDefaultStateLimit);

/// Generic step-doubling RK4 from s0 to s1.
PropagationResult propagate(const Generator& generator, std::vector<cplx> initial, double s0, double s1,
                            const IntegrateOptions& options);

/// One RK4 pass with a fixed number of steps.
std::vector<cplx> rk4_fixed(const Generator& generator, std::vector<cplx> psi, double s0, double s1, long steps,
                            double* norm_drift = nullptr);

/// Matrix-free H(s) psi on the full 2^n space: (1-s) W diag(h) W psi + s f psi.
class FullSpaceHamiltonian {
 public:
  FullSpaceHamiltonian(const ProblemFamily& family, int state_limit = kDefaultStateLimit);
  void apply(double s, std::span<const cplx> psi, std::span<cplx> out) const;
  void apply_initial(std::span<const cplx> psi, std::span<cplx> out) const;
  void apply_final(std::span<const cplx> psi, std::span<cplx> out) const;
  const std::vector<double>& final_values() const { return f_; }
  const std::vector<double>& initial_values() const { return h_; }
  int n() const { return n_; }

 private:
  int n_;
  std::vector<double> f_;
  std::vector<double> h_;
};

}  // namespace adiabatic
