#include <cmath>
#include <numbers>

#include "adiabatic/kernels.hpp"

namespace adiabatic::kernels::detail {
namespace {

void walsh_hadamard_scalar(std::span<cplx> x) {
  const double k = std::numbers::sqrt2 / 2.0;
  const std::size_t dim = x.size();
  for (std::size_t half = 1; half < dim; half <<= 1) {
    for (std::size_t block = 0; block < dim; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const cplx a = x[i];
        const cplx b = x[i + half];
        x[i] = cplx((a.real() + b.real()) * k, (a.imag() + b.imag()) * k);
        x[i + half] = cplx((a.real() - b.real()) * k, (a.imag() - b.imag()) * k);
      }
    }
  }
}

void multiply_scalar(std::span<cplx> x, std::span<const cplx> f) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] *= f[i];
}

void diagonal_multiply_scalar(std::span<const double> d, std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = d[i] * x[i];
}

void axpy_scalar(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void phase_rotate_scalar(std::span<cplx> x, std::span<const double> values, double angle) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double theta = angle * values[i];
    x[i] *= cplx(std::cos(theta), -std::sin(theta));
  }
}

double squared_norm_scalar(std::span<const cplx> x) {
  double acc = 0.0;
  for (const cplx& v : x) acc += v.real() * v.real() + v.imag() * v.imag();
  return acc;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{Isa::scalar,         walsh_hadamard_scalar, multiply_scalar,  diagonal_multiply_scalar,
                             axpy_scalar,         phase_rotate_scalar,   squared_norm_scalar};
  return t;
}

}  // namespace adiabatic::kernels::detail
