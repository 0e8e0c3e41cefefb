#pragma once

// Gate-level approximation of the adiabatic evolution.
//
// The continuous path is replaced by r Hamiltonians H'_j = H(j/r), each
// applied for T/r, and every factor exp(-i (T/r) H'_j) is split into
//   U''_j = W F_{0,j} W F_{f,j},
//   F_{f,j}|z> = exp(-i (T/r)(j/r) f(z))|z>,
//   F_{0,j}|z> = exp(-i (T/r)(1 - j/r) h(z))|z>.

#include <cstdint>
#include <string>
#include <vector>

#include "adiabatic/evolution.hpp"
#include "adiabatic/random.hpp"

namespace adiabatic {

struct TrotterPlan {
  ProblemFamily family;
  double T;
  long r;

  /// Throws DomainError unless T > 0 and r >= 1.
  void validate() const;
};

/// Normalized n-fold Hadamard transform; an involution.
StateVector hadamard_transform(StateVector state);

/// Amplitude z multiplied by exp(-i angle_scale g(z)).
StateVector apply_phase(StateVector state, const CostFunction& g, double angle_scale);

/// Applies F_{f,j}, W, F_{0,j}, W in that order (1 <= j <= r).
StateVector trotter_step(StateVector state, long j, const TrotterPlan& plan);

/// U''_r ... U''_1 applied to `initial` (uniform superposition by default).
StateVector trotter_evolve(const TrotterPlan& plan);
StateVector trotter_evolve(const TrotterPlan& plan, StateVector initial);

/// exp(-i (T/r) H'_j) applied exactly through an eigendecomposition of H(j/r).
StateVector exact_step(StateVector state, long j, const TrotterPlan& plan, int dense_limit = kDefaultDenseLimit);

/// U'(T) = exp(-i (T/r) H'_r) ... exp(-i (T/r) H'_1) applied to `initial`.
StateVector exact_piecewise_evolve(const TrotterPlan& plan, int dense_limit = kDefaultDenseLimit);
StateVector exact_piecewise_evolve(const TrotterPlan& plan, StateVector initial, int dense_limit = kDefaultDenseLimit);

/// Haar-like random state: normalized complex Gaussian amplitudes.
StateVector random_state(int n, CounterRng& rng);

/// U(T) psi from the converged integrator of the continuous path.
StateVector reference_evolve(const ProblemFamily& family, double T, const StateVector& initial, double tolerance = 1e-9);

struct TrotterErrorRow {
  long r;
  double T;
  int n;
  /// max over the sample states of || U(T) psi - U''(T) psi ||.
  double error_vs_reference;
};

struct TrotterSweepOptions {
  int sample_states = 16;
  std::uint64_t seed = 1;
  double reference_tolerance = 1e-9;
};

/**
 * Distance between the gate sequence and the continuous evolution for every
 * (T, r) pair. The unitary distance is estimated as the maximum final-state
 * distance over a fixed set of seeded random states, which lower-bounds the
 * operator norm.
 */
std::vector<TrotterErrorRow> trotter_error_sweep(const ProblemFamily& family, const std::vector<double>& T_values,
                                                 const std::vector<long>& r_values, const TrotterSweepOptions& options = {});

struct Lemma1Report {
  int n = 0;
  double T = 0.0;
  double delta = 0.0;
  /// sqrt(2 T delta).
  double bound = 0.0;
  /// Allowance for integrator error added to the bound.
  double slack = 0.0;
  std::vector<double> distances;
  double max_distance = 0.0;
  double median_distance = 0.0;
  bool all_within = false;
};

struct Lemma1Options {
  int trials = 100;
  std::uint64_t seed = 1;
  double integrator_tolerance = 1e-9;
  double slack = 1e-4;
};

/**
 * Integrates H(t) and H'(t) = H(t) + E(t) from the same random state for each
 * trial, where E(t) = cos(w t) E1 + sin(w t) E2 with random Hermitian E1, E2
 * of norm delta/sqrt(2), so that ||E(t)|| <= delta for all t.
 */
Lemma1Report lemma1_check(const ProblemFamily& family, double T, double delta, const Lemma1Options& options = {});

}  // namespace adiabatic
