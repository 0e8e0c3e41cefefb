#pragma once

// Cost functions, problem families and the Hamiltonians built from them.
//
// H_f = sum_z f(z)|z><z| is diagonal in the computational basis and
// H_0 = sum_z h(z)|z^><z^| is diagonal in the Hadamard basis, where
// |z^> = W^{(x)n}|z>. The interpolated Hamiltonian is H(s) = (1-s)H_0 + s H_f.

#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "adiabatic/bits.hpp"

namespace adiabatic {

/// Largest qubit count for which full 2^n x 2^n matrices are built.
inline constexpr int kDefaultDenseLimit = 14;
/// Largest qubit count for which full 2^n state vectors are allocated.
inline constexpr int kDefaultStateLimit = 26;

enum class FamilyTag { hamming_weight, search, perturbed, custom };

const char* to_string(FamilyTag tag);

/// Real-valued function on n-bit strings.
class CostFunction {
 public:
  using Evaluator = std::function<double(Index)>;

  CostFunction(int n, Evaluator eval, bool weight_symmetric, FamilyTag tag);

  int n() const { return n_; }
  double operator()(Index z) const { return eval_(z); }
  bool weight_symmetric() const { return weight_symmetric_; }
  FamilyTag tag() const { return tag_; }

  /// Value on the weight-k class. Requires weight_symmetric().
  double at_weight(int k) const;
  /// at_weight(0..n).
  std::vector<double> weight_profile() const;

  /// All 2^n values in index order. Throws CapacityError above `limit` qubits.
  std::vector<double> tabulate(int limit = kDefaultStateLimit) const;

  /// max_z |f(z)|, over weight classes when weight-symmetric, else exhaustively.
  double max_abs(int limit = kDefaultStateLimit) const;

 private:
  int n_;
  Evaluator eval_;
  bool weight_symmetric_;
  FamilyTag tag_;
};

CostFunction hamming_weight_cost(int n);

struct HammingWeightParams {};
struct SearchParams {
  Index marked = 0;
};
/// f(z) = w(z) for w(z) <= (1/2 + epsilon) n, and tail[w(z) - k0] above it,
/// where k0 is the first weight strictly above the threshold.
struct PerturbedParams {
  double epsilon = 0.0;
  std::vector<double> tail;
};
/// Explicit table of 2^n values; the initial cost is the Hamming weight.
struct CustomParams {
  std::vector<double> values;
};

using FamilyParams = std::variant<HammingWeightParams, SearchParams, PerturbedParams, CustomParams>;

/// Final cost f together with the h that defines H_0.
struct ProblemFamily {
  int n;
  CostFunction cost;
  CostFunction initial_cost;
  FamilyParams params;

  FamilyTag tag() const { return cost.tag(); }
  /// Both f and h depend on z only through w(z), and h is the Hamming weight.
  bool supports_dicke() const;
  std::string describe() const;
};

/// Builds a family with the standard h: h(z) = 1 for z != 0^n for search,
/// h = w otherwise. Throws ContractViolation / DomainError on invalid params.
ProblemFamily make_family(int n, FamilyParams params);

/// Perturbed family whose only perturbed string is 1^n, with f(1^n) = -1.
ProblemFamily make_spike_family(int n);

/// First weight strictly above (1/2 + epsilon) n.
int first_perturbed_weight(int n, double epsilon);

/// True for the perturbed family with a single perturbed weight class {n} and p = -1.
bool is_spike_family(const ProblemFamily& family);

enum class Basis { computational, hadamard_diagonal, dicke };

const char* to_string(Basis basis);

/**
 * Dense Hermitian matrix.
 *
 * Entries are stored as a real symmetric part plus an optional imaginary
 * antisymmetric part; every operator built from a problem family is real, so
 * the imaginary part is only allocated for genuinely complex input.
 */
class HermitianOperator {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws ContractViolation unless |m(i,j) - m(j,i)| <= kTolerance.
  HermitianOperator(Eigen::MatrixXd real, Basis basis);
  /// Throws ContractViolation unless |m(i,j) - conj(m(j,i))| <= kTolerance.
  HermitianOperator(const Eigen::MatrixXcd& m, Basis basis);

  Index dim() const { return static_cast<Index>(real_.rows()); }
  Basis basis() const { return basis_; }
  bool is_real() const { return imag_.size() == 0; }

  const Eigen::MatrixXd& real_part() const { return real_; }
  /// Empty when is_real().
  const Eigen::MatrixXd& imag_part() const { return imag_; }

  std::complex<double> operator()(Index i, Index j) const;
  Eigen::MatrixXcd to_complex() const;

  HermitianOperator& operator*=(double a);
  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);

 private:
  HermitianOperator(Eigen::MatrixXd real, Eigen::MatrixXd imag, Basis basis);
  void require_compatible(const HermitianOperator& other) const;

  Eigen::MatrixXd real_;
  Eigen::MatrixXd imag_;
  Basis basis_;
};

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator*(double s, HermitianOperator a);

/// diag(f(z)) in the computational basis.
HermitianOperator build_final_hamiltonian(const CostFunction& cost, int dense_limit = kDefaultDenseLimit);

/// W diag(h) W in the computational basis. Throws ContractViolation unless
/// h(0^n) = 0 and h(z) >= 1 elsewhere.
HermitianOperator build_initial_hamiltonian(const CostFunction& initial_cost, int dense_limit = kDefaultDenseLimit);

/// c with <x|H_0|y> = c[x ^ y]; c = W h / sqrt(2^n) for the normalized transform W.
std::vector<double> initial_hamiltonian_kernel(const CostFunction& initial_cost, int limit = kDefaultStateLimit);

/// (1 - s) H0 + s Hf.
HermitianOperator interpolate(const HermitianOperator& h0, const HermitianOperator& hf, double s);

/// Checks h(0^n) = 0 and h(z) >= 1 for z != 0^n.
void validate_initial_cost(const CostFunction& h, int limit = kDefaultStateLimit);

/// Real symmetric tridiagonal matrix.
struct Tridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  std::size_t size() const { return diagonal.size(); }
  Eigen::MatrixXd dense() const;
};

/**
 * H(s) restricted to the total-spin sector 2j = two_j of a weight-symmetric
 * family. Basis states are ordered by Hamming weight k = (n - two_j)/2 ...
 * (n + two_j)/2; two_j = n is the symmetric (Dicke) sector. The sector occurs
 * with multiplicity spin_sector_multiplicity(n, two_j) in the full space.
 */
Tridiagonal spin_sector(const ProblemFamily& family, double s, int two_j);

/// d/ds H(s) = H_f - H_0 restricted to a spin sector.
Tridiagonal spin_sector_derivative(const ProblemFamily& family, int two_j);

/// C(n, (n-two_j)/2) - C(n, (n-two_j)/2 - 1).
double spin_sector_multiplicity(int n, int two_j);

/// (n+1) x (n+1) Dicke-basis matrix of H(s). Throws UnsupportedFamily unless
/// family.supports_dicke().
HermitianOperator build_dicke_reduction(const ProblemFamily& family, double s);

double binomial(int n, int k);

}  // namespace adiabatic
