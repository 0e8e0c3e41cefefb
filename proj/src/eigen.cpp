#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "adiabatic/error.hpp"
#include "adiabatic/spectral.hpp"
#include "lapack.hpp"

namespace adiabatic {
namespace lapack {
namespace {

void check(lapack_int info, const char* routine) {
  if (info != 0) throw AccuracyError(std::string(routine) + " failed with info = " + std::to_string(info));
}

double fine_abstol() { return 2.0 * LAPACKE_dlamch('S'); }

}  // namespace

std::vector<double> symmetric_eigenvalues(double* a, int n, int count) {
  if (n == 0) return {};
  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  const bool partial = count > 0 && count < n;
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', partial ? 'I' : 'A', 'L', n, a, n, 0.0, 0.0, 1,
                                         partial ? count : n, fine_abstol(), &found, w.data(), nullptr, 1, support.data());
  check(info, "dsyevr");
  w.resize(static_cast<std::size_t>(found));
  return w;
}

void symmetric_eigh(double* a, int n, double* w, double* z) {
  if (n == 0) return;
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  check(LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'A', 'L', n, a, n, 0.0, 0.0, 1, n, fine_abstol(), &found, w, z, n,
                       support.data()),
        "dsyevr");
}

void hermitian_eigh(std::complex<double>* a, int n, double* w, std::complex<double>* z) {
  if (n == 0) return;
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  check(LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'A', 'L', n, a, n, 0.0, 0.0, 1, n, fine_abstol(), &found, w, z, n,
                       support.data()),
        "zheevr");
}

std::vector<double> hermitian_eigenvalues(std::complex<double>* a, int n) {
  if (n == 0) return {};
  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  check(LAPACKE_zheevr(LAPACK_COL_MAJOR, 'N', 'A', 'L', n, a, n, 0.0, 0.0, 1, n, fine_abstol(), &found, w.data(),
                       nullptr, 1, support.data()),
        "zheevr");
  return w;
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const auto n = static_cast<lapack_int>(d.size());
  if (n == 0) return {};
  e.resize(std::max<std::size_t>(d.size(), 1));
  check(LAPACKE_dstev(LAPACK_COL_MAJOR, 'N', n, d.data(), e.data(), nullptr, 1), "dstev");
  return d;
}

}  // namespace lapack

namespace {

int checked_size(Index dim) {
  if (dim > 1u << 15) throw CapacityError("dense eigensolve limited to dimension 32768");
  return static_cast<int>(dim);
}

}  // namespace

void normalize_phases(Eigen::MatrixXcd& vectors) {
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    auto col = vectors.col(k);
    for (Eigen::Index i = 0; i < col.size(); ++i) {
      const double mag = std::abs(col(i));
      if (mag > 1e-10) {
        col *= std::conj(col(i)) / mag;
        col(i) = mag;
        break;
      }
    }
  }
}

Eigensystem eigh(const HermitianOperator& h) {
  const int n = checked_size(h.dim());
  Eigensystem out;
  out.values.resize(static_cast<std::size_t>(n));
  if (h.is_real()) {
    Eigen::MatrixXd a = h.real_part();
    Eigen::MatrixXd z(n, n);
    lapack::symmetric_eigh(a.data(), n, out.values.data(), z.data());
    out.vectors = z.cast<std::complex<double>>();
  } else {
    Eigen::MatrixXcd a = h.to_complex();
    out.vectors.resize(n, n);
    lapack::hermitian_eigh(a.data(), n, out.values.data(), out.vectors.data());
  }
  normalize_phases(out.vectors);
  return out;
}

Eigensystem eigh(const Eigen::MatrixXcd& m) { return eigh(HermitianOperator(m, Basis::computational)); }

std::vector<double> eigenvalues(const HermitianOperator& h) {
  const int n = checked_size(h.dim());
  if (h.is_real()) {
    Eigen::MatrixXd a = h.real_part();
    return lapack::symmetric_eigenvalues(a.data(), n);
  }
  Eigen::MatrixXcd a = h.to_complex();
  return lapack::hermitian_eigenvalues(a.data(), n);
}

std::vector<double> lowest_eigenvalues(const HermitianOperator& h, int count) {
  const int n = checked_size(h.dim());
  if (count < 1 || count > n) throw DomainError("requested eigenvalue count out of range");
  if (h.is_real()) {
    Eigen::MatrixXd a = h.real_part();
    return lapack::symmetric_eigenvalues(a.data(), n, count);
  }
  auto all = eigenvalues(h);
  all.resize(static_cast<std::size_t>(count));
  return all;
}

std::vector<double> eigenvalues(const Tridiagonal& t) { return lapack::tridiagonal_eigenvalues(t.diagonal, t.off_diagonal); }

double operator_norm(const HermitianOperator& h) {
  const auto w = eigenvalues(h);
  if (w.empty()) return 0.0;
  return std::max(std::abs(w.front()), std::abs(w.back()));
}

double matching_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("spectra have different lengths");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

}  // namespace adiabatic
