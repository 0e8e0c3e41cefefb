#pragma once

// State-vector inner loops with a scalar reference implementation and
// ISA-specific variants selected once at runtime.

#include <complex>
#include <span>

namespace adiabatic::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  /// Normalized n-fold Walsh-Hadamard transform, 1/sqrt(2) applied per fold.
  void (*walsh_hadamard)(std::span<cplx> x);
  /// x[i] *= factors[i]
  void (*multiply)(std::span<cplx> x, std::span<const cplx> factors);
  /// y[i] = d[i] * x[i] for a real diagonal d
  void (*diagonal_multiply)(std::span<const double> d, std::span<const cplx> x, std::span<cplx> y);
  /// y[i] += a * x[i]
  void (*axpy)(cplx a, std::span<const cplx> x, std::span<cplx> y);
  /// x[i] *= exp(-i * angle * values[i])
  void (*phase_rotate)(std::span<cplx> x, std::span<const double> values, double angle);
  double (*squared_norm)(std::span<const cplx> x);
};

bool isa_available(Isa isa);
const char* isa_name(Isa isa);

/// Table for a specific ISA; throws ContractViolation when unavailable.
const KernelTable& table(Isa isa);

/// Table used by the library: the widest ISA the CPU supports, unless forced.
const KernelTable& active();

/// Overrides runtime selection (tests and benchmarking). Not thread-safe with
/// concurrent kernel calls.
void force_isa(Isa isa);
void reset_isa();

// Convenience wrappers over active().
inline void walsh_hadamard(std::span<cplx> x) { active().walsh_hadamard(x); }
inline void multiply(std::span<cplx> x, std::span<const cplx> f) { active().multiply(x, f); }
inline void diagonal_multiply(std::span<const double> d, std::span<const cplx> x, std::span<cplx> y) {
  active().diagonal_multiply(d, x, y);
}
inline void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) { active().axpy(a, x, y); }
inline void phase_rotate(std::span<cplx> x, std::span<const double> values, double angle) {
  active().phase_rotate(x, values, angle);
}
inline double squared_norm(std::span<const cplx> x) { return active().squared_norm(x); }

namespace detail {
const KernelTable& scalar_table();
#if defined(ADIABATIC_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif
}  // namespace detail

}  // namespace adiabatic::kernels
