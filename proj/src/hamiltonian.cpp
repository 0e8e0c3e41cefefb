#include "adiabatic/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "adiabatic/error.hpp"
#include "adiabatic/kernels.hpp"

namespace adiabatic {
namespace {

void require_qubits(int n) {
  if (n < 1 || n > kMaxBits) throw DomainError("qubit count must be in [1, " + std::to_string(kMaxBits) + "], got " + std::to_string(n));
}

void require_capacity(int n, int limit, const char* what) {
  if (n > limit) {
    throw CapacityError(std::string(what) + " needs n <= " + std::to_string(limit) + ", got n = " + std::to_string(n));
  }
}

void require_unit_interval(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("interpolation parameter s must lie in [0,1], got " + std::to_string(s));
}

}  // namespace

const char* to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::hamming_weight:
      return "hamming_weight";
    case FamilyTag::search:
      return "search";
    case FamilyTag::perturbed:
      return "perturbed";
    case FamilyTag::custom:
      return "custom";
  }
  return "unknown";
}

const char* to_string(Basis basis) {
  switch (basis) {
    case Basis::computational:
      return "computational";
    case Basis::hadamard_diagonal:
      return "hadamard_diagonal";
    case Basis::dicke:
      return "dicke";
  }
  return "unknown";
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// ---------------------------------------------------------------------------
// CostFunction

CostFunction::CostFunction(int n, Evaluator eval, bool weight_symmetric, FamilyTag tag)
    : n_(n), eval_(std::move(eval)), weight_symmetric_(weight_symmetric), tag_(tag) {
  require_qubits(n);
  if (!eval_) throw ContractViolation("cost function needs an evaluator");
}

double CostFunction::at_weight(int k) const {
  if (!weight_symmetric_) throw UnsupportedFamily("cost function is not weight-symmetric");
  if (k < 0 || k > n_) throw DomainError("weight out of range");
  return eval_(k == 0 ? Index{0} : (Index{1} << k) - 1);
}

std::vector<double> CostFunction::weight_profile() const {
  std::vector<double> out(static_cast<std::size_t>(n_) + 1);
  for (int k = 0; k <= n_; ++k) out[static_cast<std::size_t>(k)] = at_weight(k);
  return out;
}

std::vector<double> CostFunction::tabulate(int limit) const {
  require_capacity(n_, limit, "tabulating a cost function");
  const Index dim = dimension_of(n_);
  std::vector<double> out(dim);
  for (Index z = 0; z < dim; ++z) out[z] = eval_(z);
  return out;
}

double CostFunction::max_abs(int limit) const {
  double m = 0.0;
  if (weight_symmetric_) {
    for (double v : weight_profile()) m = std::max(m, std::abs(v));
  } else {
    for (double v : tabulate(limit)) m = std::max(m, std::abs(v));
  }
  return m;
}

CostFunction hamming_weight_cost(int n) {
  return CostFunction(
      n, [](Index z) { return static_cast<double>(hamming_weight(z)); }, true, FamilyTag::hamming_weight);
}

// ---------------------------------------------------------------------------
// Families

int first_perturbed_weight(int n, double epsilon) {
  return static_cast<int>(std::floor((0.5 + epsilon) * n)) + 1;
}

bool ProblemFamily::supports_dicke() const {
  return cost.weight_symmetric() && initial_cost.tag() == FamilyTag::hamming_weight;
}

std::string ProblemFamily::describe() const {
  std::ostringstream os;
  os << to_string(tag()) << "(n=" << n;
  if (const auto* p = std::get_if<SearchParams>(&params)) {
    os << ",u=" << to_bitstring(p->marked, n);
  } else if (const auto* p = std::get_if<PerturbedParams>(&params)) {
    os << ",epsilon=" << p->epsilon << ",p=[";
    for (std::size_t i = 0; i < p->tail.size(); ++i) os << (i ? "," : "") << p->tail[i];
    os << "]";
  }
  os << ")";
  return os.str();
}

namespace {

struct FamilyBuilder {
  int n;

  ProblemFamily operator()(const HammingWeightParams& p) const {
    return {n, hamming_weight_cost(n), hamming_weight_cost(n), p};
  }

  ProblemFamily operator()(const SearchParams& p) const {
    if (n > kMaxBits || p.marked >= dimension_of(n)) throw DomainError("search target must be an n-bit string");
    const Index u = p.marked;
    const bool symmetric = (u == 0 || u == all_ones(n));
    CostFunction f(n, [u](Index z) { return z == u ? 0.0 : 1.0; }, symmetric, FamilyTag::search);
    CostFunction h(n, [](Index z) { return z == 0 ? 0.0 : 1.0; }, true, FamilyTag::custom);
    return {n, std::move(f), std::move(h), p};
  }

  ProblemFamily operator()(const PerturbedParams& p) const {
    if (!(p.epsilon > 0.0)) throw DomainError("perturbed family needs epsilon > 0");
    const int k0 = first_perturbed_weight(n, p.epsilon);
    if (k0 > n) throw DomainError("(1/2 + epsilon) n must be below n so that some weight is perturbed");
    const auto expected = static_cast<std::size_t>(n - k0 + 1);
    if (p.tail.size() != expected) {
      throw ContractViolation("perturbation needs one value per weight " + std::to_string(k0) + ".." + std::to_string(n) +
                              " (" + std::to_string(expected) + " values), got " + std::to_string(p.tail.size()));
    }
    for (std::size_t i = 1; i < p.tail.size(); ++i) {
      if (p.tail[i] > p.tail[i - 1]) throw ContractViolation("perturbation p must be decreasing in the Hamming weight");
    }
    if (p.tail.back() != -1.0) throw ContractViolation("perturbation p must reach its global minimum -1 at weight n");
    std::vector<double> tail = p.tail;
    CostFunction f(
        n,
        [k0, tail](Index z) {
          const int k = hamming_weight(z);
          return k < k0 ? static_cast<double>(k) : tail[static_cast<std::size_t>(k - k0)];
        },
        true, FamilyTag::perturbed);
    return {n, std::move(f), hamming_weight_cost(n), p};
  }

  ProblemFamily operator()(const CustomParams& p) const {
    if (n > kDefaultStateLimit) throw CapacityError("custom cost tables are limited to n <= " + std::to_string(kDefaultStateLimit));
    if (p.values.size() != dimension_of(n)) throw ShapeError("custom cost table needs 2^n values");
    std::vector<double> by_weight(static_cast<std::size_t>(n) + 1, std::nan(""));
    bool symmetric = true;
    for (Index z = 0; z < p.values.size() && symmetric; ++z) {
      double& slot = by_weight[static_cast<std::size_t>(hamming_weight(z))];
      if (std::isnan(slot)) {
        slot = p.values[z];
      } else if (slot != p.values[z]) {
        symmetric = false;
      }
    }
    auto values = p.values;
    CostFunction f(n, [values](Index z) { return values[z]; }, symmetric, FamilyTag::custom);
    return {n, std::move(f), hamming_weight_cost(n), p};
  }
};

}  // namespace

ProblemFamily make_family(int n, FamilyParams params) {
  require_qubits(n);
  return std::visit(FamilyBuilder{n}, params);
}

ProblemFamily make_spike_family(int n) {
  // threshold (1/2 + epsilon) n = n - 1/4 leaves only weight n perturbed
  return make_family(n, PerturbedParams{0.5 - 0.25 / n, {-1.0}});
}

bool is_spike_family(const ProblemFamily& family) {
  const auto* p = std::get_if<PerturbedParams>(&family.params);
  return p != nullptr && p->tail.size() == 1 && p->tail.front() == -1.0;
}

void validate_initial_cost(const CostFunction& h, int limit) {
  if (h.weight_symmetric()) {
    const auto profile = h.weight_profile();
    if (profile[0] != 0.0) throw ContractViolation("initial cost needs h(0^n) = 0");
    for (std::size_t k = 1; k < profile.size(); ++k) {
      if (profile[k] < 1.0) throw ContractViolation("initial cost needs h(z) >= 1 for z != 0^n");
    }
    return;
  }
  const auto table = h.tabulate(limit);
  if (table[0] != 0.0) throw ContractViolation("initial cost needs h(0^n) = 0");
  for (Index z = 1; z < table.size(); ++z) {
    if (table[z] < 1.0) throw ContractViolation("initial cost needs h(z) >= 1 for z != 0^n, violated at z = " + to_bitstring(z, h.n()));
  }
}

// ---------------------------------------------------------------------------
// HermitianOperator

HermitianOperator::HermitianOperator(Eigen::MatrixXd real, Basis basis) : real_(std::move(real)), basis_(basis) {
  if (real_.rows() != real_.cols()) throw ShapeError("Hermitian operator must be square");
  const double asym = (real_ - real_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kTolerance) throw ContractViolation("matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
  real_ = 0.5 * (real_ + real_.transpose()).eval();
}

HermitianOperator::HermitianOperator(const Eigen::MatrixXcd& m, Basis basis) : basis_(basis) {
  if (m.rows() != m.cols()) throw ShapeError("Hermitian operator must be square");
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kTolerance) throw ContractViolation("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  real_ = sym.real();
  if (sym.imag().cwiseAbs().maxCoeff() > 0.0) imag_ = sym.imag();
}

HermitianOperator::HermitianOperator(Eigen::MatrixXd real, Eigen::MatrixXd imag, Basis basis)
    : real_(std::move(real)), imag_(std::move(imag)), basis_(basis) {}

std::complex<double> HermitianOperator::operator()(Index i, Index j) const {
  const auto r = static_cast<Eigen::Index>(i);
  const auto c = static_cast<Eigen::Index>(j);
  return {real_(r, c), is_real() ? 0.0 : imag_(r, c)};
}

Eigen::MatrixXcd HermitianOperator::to_complex() const {
  Eigen::MatrixXcd out = real_.cast<std::complex<double>>();
  if (!is_real()) out.imag() = imag_;
  return out;
}

void HermitianOperator::require_compatible(const HermitianOperator& other) const {
  if (dim() != other.dim()) throw ShapeError("operator dimensions differ: " + std::to_string(dim()) + " vs " + std::to_string(other.dim()));
  if (basis_ != other.basis_) throw ShapeError(std::string("operator bases differ: ") + to_string(basis_) + " vs " + to_string(other.basis_));
}

HermitianOperator& HermitianOperator::operator*=(double a) {
  real_ *= a;
  if (!is_real()) imag_ *= a;
  return *this;
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  require_compatible(other);
  real_ += other.real_;
  if (!other.is_real()) {
    if (is_real()) {
      imag_ = other.imag_;
    } else {
      imag_ += other.imag_;
    }
  }
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  require_compatible(other);
  real_ -= other.real_;
  if (!other.is_real()) {
    if (is_real()) {
      imag_ = -other.imag_;
    } else {
      imag_ -= other.imag_;
    }
  }
  return *this;
}

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

// ---------------------------------------------------------------------------
// Builders

HermitianOperator build_final_hamiltonian(const CostFunction& cost, int dense_limit) {
  require_capacity(cost.n(), dense_limit, "dense final Hamiltonian");
  const auto f = cost.tabulate(dense_limit);
  const Eigen::Map<const Eigen::VectorXd> diag(f.data(), static_cast<Eigen::Index>(f.size()));
  return HermitianOperator(Eigen::MatrixXd(diag.asDiagonal()), Basis::computational);
}

std::vector<double> initial_hamiltonian_kernel(const CostFunction& initial_cost, int limit) {
  validate_initial_cost(initial_cost, limit);
  const auto h = initial_cost.tabulate(limit);
  // <x|H0|y> = (1/N) sum_z h(z) (-1)^{z.(x^y)} depends only on x^y.
  std::vector<kernels::cplx> spectrum(h.begin(), h.end());
  kernels::walsh_hadamard(spectrum);
  const double norm = 1.0 / std::sqrt(static_cast<double>(h.size()));
  std::vector<double> by_xor(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) by_xor[v] = spectrum[v].real() * norm;
  return by_xor;
}

HermitianOperator build_initial_hamiltonian(const CostFunction& initial_cost, int dense_limit) {
  require_capacity(initial_cost.n(), dense_limit, "dense initial Hamiltonian");
  const auto by_xor = initial_hamiltonian_kernel(initial_cost, dense_limit);
  const auto dim = static_cast<Eigen::Index>(by_xor.size());
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index y = 0; y < dim; ++y) {
    for (Eigen::Index x = 0; x < dim; ++x) m(x, y) = by_xor[static_cast<std::size_t>(x ^ y)];
  }
  return HermitianOperator(std::move(m), Basis::computational);
}

HermitianOperator interpolate(const HermitianOperator& h0, const HermitianOperator& hf, double s) {
  require_unit_interval(s);
  return (1.0 - s) * h0 + s * hf;
}

Eigen::MatrixXd Tridiagonal::dense() const {
  const auto d = static_cast<Eigen::Index>(diagonal.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = diagonal[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < d; ++i) {
    m(i, i + 1) = m(i + 1, i) = off_diagonal[static_cast<std::size_t>(i)];
  }
  return m;
}

namespace {

void require_dicke(const ProblemFamily& family) {
  if (!family.supports_dicke()) {
    throw UnsupportedFamily("family " + family.describe() + " has no weight-symmetric reduction (needs weight-symmetric f and h = w)");
  }
}

int sector_first_weight(int n, int two_j) {
  if (two_j < 0 || two_j > n || (n - two_j) % 2 != 0) {
    throw DomainError("spin sector 2j = " + std::to_string(two_j) + " does not exist for n = " + std::to_string(n));
  }
  return (n - two_j) / 2;
}

// <j,m|S_x|j,m-1> for the weight pair (k, k+1), m = n/2 - k.
double collective_flip(int two_j, int n, int k) {
  const double two_m = n - 2.0 * k;
  return 0.5 * std::sqrt((two_j * (two_j + 2.0) - two_m * (two_m - 2.0)) / 4.0);
}

}  // namespace

Tridiagonal spin_sector(const ProblemFamily& family, double s, int two_j) {
  require_dicke(family);
  require_unit_interval(s);
  const int n = family.n;
  const int k_first = sector_first_weight(n, two_j);
  Tridiagonal t;
  t.diagonal.resize(static_cast<std::size_t>(two_j) + 1);
  t.off_diagonal.resize(static_cast<std::size_t>(two_j));
  for (int i = 0; i <= two_j; ++i) {
    const int k = k_first + i;
    t.diagonal[static_cast<std::size_t>(i)] = (1.0 - s) * n / 2.0 + s * family.cost.at_weight(k);
    if (i < two_j) t.off_diagonal[static_cast<std::size_t>(i)] = -(1.0 - s) * collective_flip(two_j, n, k);
  }
  return t;
}

Tridiagonal spin_sector_derivative(const ProblemFamily& family, int two_j) {
  require_dicke(family);
  const int n = family.n;
  const int k_first = sector_first_weight(n, two_j);
  Tridiagonal t;
  t.diagonal.resize(static_cast<std::size_t>(two_j) + 1);
  t.off_diagonal.resize(static_cast<std::size_t>(two_j));
  for (int i = 0; i <= two_j; ++i) {
    const int k = k_first + i;
    t.diagonal[static_cast<std::size_t>(i)] = family.cost.at_weight(k) - n / 2.0;
    if (i < two_j) t.off_diagonal[static_cast<std::size_t>(i)] = collective_flip(two_j, n, k);
  }
  return t;
}

double spin_sector_multiplicity(int n, int two_j) {
  const int k_first = sector_first_weight(n, two_j);
  return binomial(n, k_first) - binomial(n, k_first - 1);
}

HermitianOperator build_dicke_reduction(const ProblemFamily& family, double s) {
  return HermitianOperator(spin_sector(family, s, family.n).dense(), Basis::dicke);
}

}  // namespace adiabatic
