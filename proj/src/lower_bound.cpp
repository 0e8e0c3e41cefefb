#include "adiabatic/lower_bound.hpp"

#include <algorithm>
#include <cmath>

#include "adiabatic/error.hpp"
#include "adiabatic/spectral.hpp"
#include "lapack.hpp"

namespace adiabatic {
namespace {

void require_unit(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("s must lie in [0,1], got " + std::to_string(s));
}

// <1|v0(s)>, <1|v1(s)> in extended precision.
struct QubitOverlaps {
  long double a;
  long double b;
};

QubitOverlaps qubit_overlaps(long double s) {
  const long double g = std::sqrt(2 * s * s - 2 * s + 1);
  const long double norm = std::sqrt((s + g) * (s + g) + (1 - s) * (1 - s));
  if (s >= 1) return {0.0L, 1.0L};
  return {(1 - s) / norm, -(s + g) / norm};
}

long double level(int n, int k, long double s) {
  const long double g = std::sqrt(2 * s * s - 2 * s + 1);
  return (n - k) * (0.5L - 0.5L * g) + k * (0.5L + 0.5L * g);
}

// Smallest eigenvalue of B's lower block: diag(lambda_y, y != 0) minus the
// rank-one term s(n+1) u~ u~^T, grouped by Hamming weight.
long double reduced_lower_minimum(int n, long double s) {
  const auto [a, b] = qubit_overlaps(s);
  const long double a2 = a * a;
  const long double b2 = b * b;
  std::vector<long double> weight(static_cast<std::size_t>(n) + 1, 0.0L);
  long double pole = level(n, 1, s);
  bool pole_found = false;
  for (int k = 1; k <= n; ++k) {
    weight[static_cast<std::size_t>(k)] =
        static_cast<long double>(binomial(n, k)) * std::pow(a2, n - k) * std::pow(b2, k);
    if (!pole_found && weight[static_cast<std::size_t>(k)] > 0) {
      pole = level(n, k, s);
      pole_found = true;
    }
  }
  const long double strength = s * (n + 1);
  if (strength == 0 || !pole_found) return level(n, 1, s);
  auto secular = [&](long double mu) {
    long double sum = 0;
    for (int k = 1; k <= n; ++k) {
      if (weight[static_cast<std::size_t>(k)] > 0) sum += weight[static_cast<std::size_t>(k)] / (level(n, k, s) - mu);
    }
    return strength * sum - 1;
  };
  long double lo = level(n, 1, s) - strength - 1;
  long double hi = pole;
  for (int it = 0; it < 200; ++it) {
    const long double mid = lo + (hi - lo) / 2;
    if (!(mid > lo && mid < hi)) break;
    if (secular(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Other vectors of the weight-1 class are untouched by the rank-one term.
  return std::min(lo + (hi - lo) / 2, level(n, 1, s));
}

double dense_crossing_function(const HermitianOperator& A) {
  const Eigen::Index dim = A.real_part().rows();
  Eigen::MatrixXd lower = A.real_part().bottomRightCorner(dim - 1, dim - 1);
  const auto w = lapack::symmetric_eigenvalues(lower.data(), static_cast<int>(dim - 1), 1);
  return A.real_part()(0, 0) - w.front();
}

template <class Fn>
double bisect_root(Fn&& fn, double lo, double hi, double tol, int n) {
  double f_lo = fn(lo);
  const double f_hi = fn(hi);
  if (!(f_lo < 0 && f_hi > 0)) {
    throw DiagnosticFailure("no sign change of the B level crossing on [0,1] for n = " + std::to_string(n));
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double f_mid = fn(mid);
    if (f_mid == 0) return mid;
    if (f_mid < 0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::array<double, 2> qubit_levels(double s) {
  require_unit(s);
  const double g = closed_form_weight_gap(s);
  return {0.5 - 0.5 * g, 0.5 + 0.5 * g};
}

Eigen::Matrix2d qubit_eigenvectors(double s) {
  require_unit(s);
  const double g = closed_form_weight_gap(s);
  const double norm = std::hypot(s + g, 1.0 - s);
  Eigen::Matrix2d v;
  v(0, 0) = (s + g) / norm;
  v(1, 0) = (1.0 - s) / norm;
  v(0, 1) = (1.0 - s) / norm;
  v(1, 1) = -(s + g) / norm;
  if (v(0, 1) == 0.0) v.col(1) = -v.col(1);
  return v;
}

double product_level(int n, int weight, double s) {
  const auto l = qubit_levels(s);
  return (n - weight) * l[0] + weight * l[1];
}

Eigen::VectorXd spike_overlap_vector(int n, double s) {
  if (n < 1 || n > kDefaultStateLimit) throw CapacityError("overlap vector limited to n <= " + std::to_string(kDefaultStateLimit));
  const Eigen::Matrix2d v = qubit_eigenvectors(s);
  const Index dim = dimension_of(n);
  Eigen::VectorXd u(static_cast<Eigen::Index>(dim));
  for (Index y = 0; y < dim; ++y) {
    const int w = hamming_weight(y);
    u(static_cast<Eigen::Index>(y)) = std::pow(v(1, 0), n - w) * std::pow(v(1, 1), w);
  }
  return u;
}

double ground_overlap_with_ones(int n, double s) {
  return std::pow(std::abs(qubit_eigenvectors(s)(1, 0)), n);
}

HermitianOperator build_A(int n, double s, int dense_limit) {
  if (n < 1 || n > dense_limit) {
    throw CapacityError("matrix A needs 1 <= n <= " + std::to_string(dense_limit) + ", got n = " + std::to_string(n));
  }
  require_unit(s);
  const Eigen::VectorXd u = spike_overlap_vector(n, s);
  Eigen::MatrixXd a = -s * (n + 1) * u * u.transpose();
  for (Eigen::Index y = 0; y < a.rows(); ++y) a(y, y) += product_level(n, hamming_weight(static_cast<Index>(y)), s);
  return HermitianOperator(std::move(a), Basis::hadamard_diagonal);
}

HermitianOperator build_B(const HermitianOperator& A) {
  if (!A.is_real() || A.dim() < 1) throw ContractViolation("B is built from a real matrix A");
  Eigen::MatrixXd b = A.real_part();
  const double corner = b(0, 0);
  b.row(0).setZero();
  b.col(0).setZero();
  b(0, 0) = corner;
  return HermitianOperator(std::move(b), A.basis());
}

double reduced_crossing_function(int n, double s) {
  require_unit(s);
  if (n < 1) throw DomainError("n must be positive");
  const long double ls = s;
  const auto [a, b] = qubit_overlaps(ls);
  const long double a11 = level(n, 0, ls) - ls * (n + 1) * std::pow(a * a, n);
  return static_cast<double>(a11 - reduced_lower_minimum(n, ls));
}

double reduced_critical_point(int n, double tol) {
  return bisect_root([n](double s) { return reduced_crossing_function(n, s); }, 0.0, 1.0, tol, n);
}

LowerBoundDiagnostic lower_bound_diagnostic(int n, DiagnosticMethod method, int dense_limit) {
  LowerBoundDiagnostic out;
  out.n = n;
  double residual = 0.0;
  if (method == DiagnosticMethod::dense) {
    if (n < 2 || n > dense_limit) throw CapacityError("dense diagnostic needs 2 <= n <= " + std::to_string(dense_limit));
    auto crossing = [&](double s) { return dense_crossing_function(build_A(n, s, dense_limit)); };
    out.s_c = bisect_root(crossing, 0.0, 1.0, 1e-9, n);
    const HermitianOperator A = build_A(n, out.s_c, dense_limit);
    const HermitianOperator B = build_B(A);
    out.norm_AB = operator_norm(A - B);
    const auto w = lowest_eigenvalues(A, 2);
    out.gap_at_sc = w[1] - w[0];
    residual = std::abs(dense_crossing_function(A));
  } else {
    if (n < 2) throw DomainError("diagnostic needs n >= 2");
    out.s_c = reduced_critical_point(n, 0.0);
    const double u0 = std::pow(qubit_eigenvectors(out.s_c)(1, 0), n);
    out.norm_AB = out.s_c * (n + 1) * std::abs(u0) * std::sqrt(std::max(0.0, 1.0 - u0 * u0));
    const auto [l0, l1] = two_lowest(make_spike_family(n), out.s_c, Backend::dicke);
    out.gap_at_sc = l1 - l0;
    residual = std::abs(reduced_crossing_function(n, out.s_c));
  }
  out.bound = out.s_c * spike_gap_bound(n);

  // B's two lowest levels differ by `residual` at the bisected s_c, so Weyl
  // gives gap(A) <= residual + 2||A - B||.
  if (out.gap_at_sc > 2.0 * out.norm_AB + residual + 1e-12) {
    throw DiagnosticFailure("gap of A at s_c exceeds 2||A-B|| for n = " + std::to_string(n));
  }
  if (out.gap_at_sc > out.bound + 1e-9) {
    throw DiagnosticFailure("gap of A at s_c exceeds s_c(n+1)/sqrt(2^(n-3)) for n = " + std::to_string(n));
  }
  return out;
}

}  // namespace adiabatic
