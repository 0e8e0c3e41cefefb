#pragma once

// Perturbation bound on the gap of the spike family f = w except f(1^n) = -1.
//
// In the eigenbasis V(s) of the unperturbed Hamming-weight Hamiltonian the
// spike Hamiltonian reads A = diag(lambda_y) - s(n+1) u u^T with
// u = V^T|1^n>. B is A with the off-diagonal entries of its first row and
// column removed, so |0^n> is an eigenvector of B with eigenvalue A_11. When
// the smallest eigenvalue of B's lower block crosses A_11 the gap of B is zero,
// and Weyl's inequality bounds the gap of A by 2||A - B||.

#include <array>

#include "adiabatic/hamiltonian.hpp"

namespace adiabatic {

/// Eigenvalues (lambda0, lambda1) of the single-qubit matrix
/// (1/2)[[1-s, s-1], [s-1, 1+s]].
std::array<double, 2> qubit_levels(double s);

/// Columns v0(s), v1(s) of the single-qubit eigenvector matrix, each with
/// first nonzero component positive; v0(0) = |0^>, v1(0) = |1^>, v0(1) = |0>,
/// v1(1) = |1>.
Eigen::Matrix2d qubit_eigenvectors(double s);

/// lambda_y(s) = (n - w(y)) lambda0(s) + w(y) lambda1(s).
double product_level(int n, int weight, double s);

/// V(s)^T |1^n>, component y equal to prod_i <1|v_{y_i}(s)>.
Eigen::VectorXd spike_overlap_vector(int n, double s);

/// |<1^n| v0(s)^{(x)n}>|.
double ground_overlap_with_ones(int n, double s);

HermitianOperator build_A(int n, double s, int dense_limit = kDefaultDenseLimit);
HermitianOperator build_B(const HermitianOperator& A);

struct LowerBoundDiagnostic {
  int n = 0;
  double s_c = 0.0;
  /// ||A - B|| at s_c.
  double norm_AB = 0.0;
  /// Gap between the two smallest eigenvalues of A at s_c.
  double gap_at_sc = 0.0;
  /// s_c (n+1) / sqrt(2^{n-3}).
  double bound = 0.0;
};

enum class DiagnosticMethod {
  /// Builds A and B as 2^n x 2^n matrices.
  dense,
  /// Uses that u is constant on weight classes: B's lower-block minimum solves
  /// a secular equation over n weight classes and the gap of A is taken from
  /// the symmetric sector. Valid for any n.
  reduced
};

/// Locates s_c by bisection (1e-9 in s for dense, to full double precision for
/// reduced) and checks
/// gap_at_sc <= 2||A-B|| and gap_at_sc <= bound. Throws DiagnosticFailure if
/// no sign change is found or a check fails.
LowerBoundDiagnostic lower_bound_diagnostic(int n, DiagnosticMethod method = DiagnosticMethod::dense,
                                            int dense_limit = kDefaultDenseLimit);

/// A_11(s) - min eig(B lower block)(s) computed over weight classes; changes
/// sign from negative to positive at s_c.
double reduced_crossing_function(int n, double s);

/// Root of reduced_crossing_function in (0,1), bisected to `tol` in s or until
/// the midpoint is no longer representable.
double reduced_critical_point(int n, double tol = 1e-12);

}  // namespace adiabatic
