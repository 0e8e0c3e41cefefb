#pragma once

// Reference computations written independently of the library code paths:
// explicit Kronecker products instead of the fast transform, Eigen's
// self-adjoint solver instead of LAPACK, brute-force clause counting.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "adiabatic/hamiltonian.hpp"
#include "adiabatic/satquery.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline Eigen::MatrixXd hadamard_matrix(int n) {
  Eigen::MatrixXd w(1, 1);
  w(0, 0) = 1.0;
  Eigen::Matrix2d h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  for (int q = 0; q < n; ++q) {
    Eigen::MatrixXd next(w.rows() * 2, w.cols() * 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) next.block(a * w.rows(), b * w.cols(), w.rows(), w.cols()) = h(a, b) * w;
    }
    w = next;
  }
  return w;
}

inline std::vector<double> values(const adiabatic::CostFunction& f) {
  std::vector<double> out(std::size_t{1} << f.n());
  for (std::size_t z = 0; z < out.size(); ++z) out[z] = f(z);
  return out;
}

inline Eigen::MatrixXd diag(const std::vector<double>& v) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
  return m;
}

inline Eigen::MatrixXd initial_hamiltonian(const adiabatic::ProblemFamily& family) {
  const Eigen::MatrixXd w = hadamard_matrix(family.n);
  return w * diag(values(family.initial_cost)) * w;
}

inline Eigen::MatrixXd hamiltonian(const adiabatic::ProblemFamily& family, double s) {
  return (1 - s) * initial_hamiltonian(family) + s * diag(values(family.cost));
}

inline std::vector<double> spectrum(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline double gap(const adiabatic::ProblemFamily& family, double s) {
  const auto w = spectrum(hamiltonian(family, s));
  return w[1] - w[0];
}

/// exp(-i t M) psi for a real symmetric M.
inline std::vector<cplx> evolve(const Eigen::MatrixXd& m, double t, const std::vector<cplx>& psi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const Eigen::MatrixXd& v = solver.eigenvectors();
  Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(psi.data(), static_cast<Eigen::Index>(psi.size()));
  Eigen::VectorXcd y = v.transpose().cast<cplx>() * x;
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) *= std::exp(cplx(0, -t * solver.eigenvalues()(i)));
  Eigen::VectorXcd out = v.cast<cplx>() * y;
  return {out.data(), out.data() + out.size()};
}

inline double distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

/// Closed form 2^n arctan(sqrt(2^n - 1)) / sqrt(2^n - 1) with the n = 0 limit.
inline double search_delay(int n) {
  const double d = std::ldexp(1.0, n);
  const double r = std::sqrt(d - 1);
  return d * std::atan(r) / r;
}

inline double search_gap(int n, double s) {
  const double d = std::ldexp(1.0, n);
  return std::sqrt(1 - 4 * (1 - 1 / d) * s * (1 - s));
}

/// Unsatisfied clause count with variable i read from bit n - i.
inline long unsatisfied(const adiabatic::Formula3CNF& phi, std::uint64_t b) {
  long count = 0;
  for (const auto& clause : phi.clauses) {
    bool sat = false;
    for (const auto& lit : clause) {
      const bool value = (b >> (phi.n - lit.var)) & 1u;
      if (value != lit.negated) sat = true;
    }
    if (!sat) ++count;
  }
  return count;
}

}  // namespace oracle
