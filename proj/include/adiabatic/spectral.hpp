#pragma once

// Eigenanalysis of interpolated Hamiltonians: eigensolves, gap curves,
// minimum-gap search and closed-form gap formulas.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "adiabatic/hamiltonian.hpp"

namespace adiabatic {

struct Eigensystem {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the eigenvector of values[k]; its first nonzero component is real positive.
  Eigen::MatrixXcd vectors;
};

/// Full eigendecomposition (LAPACK ?syevr / ?heevr).
Eigensystem eigh(const HermitianOperator& h);
/// Validates Hermiticity first; throws ContractViolation otherwise.
Eigensystem eigh(const Eigen::MatrixXcd& m);

/// All eigenvalues, ascending.
std::vector<double> eigenvalues(const HermitianOperator& h);
/// The `count` smallest eigenvalues, ascending.
std::vector<double> lowest_eigenvalues(const HermitianOperator& h, int count);
std::vector<double> eigenvalues(const Tridiagonal& t);

/// Rotates each column so that its first component with modulus above 1e-10 is real positive.
void normalize_phases(Eigen::MatrixXcd& vectors);

/// l2-induced norm = max |eigenvalue|.
double operator_norm(const HermitianOperator& h);

/// Optimal matching distance min_pi max_j |a_j - b_pi(j)| between two real
/// spectra; for real values the ascending pairing is optimal.
double matching_distance(std::span<const double> a, std::span<const double> b);

/// sqrt((2^n + 4(2^n - 1)(s^2 - s)) / 2^n): gap of the search Hamiltonian.
double closed_form_search_gap(int n, double s);
/// sqrt(2s^2 - 2s + 1): gap of the Hamming-weight Hamiltonian, for every n.
double closed_form_weight_gap(double s);

enum class Backend { dense, dicke };

const char* to_string(Backend backend);
Backend parse_backend(const std::string& name);
/// dicke when the family supports it, dense otherwise.
Backend preferred_backend(const ProblemFamily& family);

struct SpectralReport {
  std::string family;
  Backend backend = Backend::dense;
  std::vector<double> s_grid;
  std::vector<double> lambda0;
  std::vector<double> lambda1;
  std::vector<double> gap;
  double s_star = 0.0;
  double g_min = 0.0;
  /// max_s ||dH/ds|| = ||H_f - H_0|| over the full 2^n-dimensional space.
  double delta_max = 0.0;
};

struct GapOptions {
  /// Location tolerance of the refined minimum, scaled by the gap near the
  /// dip since avoided crossings are about g_min / slope wide.
  double tol_s = 1e-6;
  int dense_limit = kDefaultDenseLimit;
  /// Skip the golden-section refinement and report the best grid point.
  bool refine = true;
};

/// `points` equally spaced values on [0,1] with both endpoints exact.
std::vector<double> uniform_grid(int points);

/**
 * Two lowest eigenvalues of H(s) on `grid` plus a refined minimum gap.
 *
 * The dense backend diagonalizes the 2^n x 2^n matrix (two lowest values by
 * bisection). The dicke backend works in the total-spin sectors (the
 * (n+1)-dimensional symmetric sector holds the ground state, smaller sectors
 * can hold the first excited level) with extended-precision Sturm bisection,
 * so that gaps far below double-precision eigenvalue resolution are still
 * resolved.
 */
SpectralReport gap_curve(const ProblemFamily& family, std::span<const double> grid, Backend backend,
                         const GapOptions& options = {});

struct MinGap {
  double s_star;
  double g_min;
};

/// 101-point scan followed by golden-section refinement around the best bracket.
MinGap min_gap(const ProblemFamily& family, Backend backend, const GapOptions& options = {});

/// Refines the minimum of an existing report in place (reuses its grid values).
void refine_minimum(SpectralReport& report, const ProblemFamily& family, const GapOptions& options = {});

/// (n+1) 2^{-(n-3)/2}: upper bound on the minimum gap of the spike family.
double spike_gap_bound(int n);

struct MinGapRow {
  int n;
  double s_star;
  double g_min;
  /// spike_gap_bound(n)
  double bound;
};

MinGapRow min_gap_row(const ProblemFamily& family, Backend backend, const GapOptions& options = {});

/// (lambda0, lambda1) of H(s) for one s.
std::pair<double, double> two_lowest(const ProblemFamily& family, double s, Backend backend,
                                     int dense_limit = kDefaultDenseLimit);

/// ||H_f - H_0|| over the full space.
double derivative_norm(const ProblemFamily& family, Backend backend, int dense_limit = kDefaultDenseLimit);

}  // namespace adiabatic
