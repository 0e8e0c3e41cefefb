#pragma once

// Thin wrappers over the LAPACKE symmetric/Hermitian drivers. Column-major,
// lower triangle referenced; input buffers are overwritten.

#include <complex>
#include <vector>

namespace adiabatic::lapack {

/// The `count` smallest eigenvalues (all when count <= 0 or count >= n),
/// computed by bisection to full relative accuracy.
std::vector<double> symmetric_eigenvalues(double* a, int n, int count = 0);

/// All eigenvalues (ascending) and eigenvectors (columns of z, n x n).
void symmetric_eigh(double* a, int n, double* w, double* z);

void hermitian_eigh(std::complex<double>* a, int n, double* w, std::complex<double>* z);
std::vector<double> hermitian_eigenvalues(std::complex<double>* a, int n);

/// Eigenvalues of the tridiagonal matrix with diagonal d and off-diagonal e.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e);

}  // namespace adiabatic::lapack
