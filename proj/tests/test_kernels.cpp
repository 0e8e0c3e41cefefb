#include <doctest.h>

#include <cmath>
#include <vector>

#include "adiabatic/kernels.hpp"
#include "adiabatic/random.hpp"
#include "oracles.hpp"

using namespace adiabatic;
using kernels::cplx;

namespace {

std::vector<cplx> random_vector(std::size_t dim, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<cplx> v(dim);
  for (auto& x : v) x = rng.complex_normal();
  return v;
}

std::vector<double> random_reals(std::size_t dim, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<double> v(dim);
  for (auto& x : v) x = rng.normal();
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("walsh-hadamard matches the explicit Kronecker matrix") {
  for (int n = 1; n <= 6; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    auto x = random_vector(dim, 10 + n);
    const Eigen::MatrixXd w = oracle::hadamard_matrix(n);
    Eigen::VectorXcd expected = w.cast<cplx>() * Eigen::Map<Eigen::VectorXcd>(x.data(), static_cast<Eigen::Index>(dim));
    kernels::walsh_hadamard(x);
    for (std::size_t i = 0; i < dim; ++i) CHECK(std::abs(x[i] - expected(static_cast<Eigen::Index>(i))) < 1e-12);
  }
}

TEST_CASE("walsh-hadamard is an involution") {
  auto x = random_vector(1024, 3);
  const auto original = x;
  kernels::walsh_hadamard(x);
  kernels::walsh_hadamard(x);
  CHECK(max_diff(x, original) < 1e-12);
}

TEST_CASE("scalar and vector kernels agree") {
  if (!kernels::isa_available(kernels::Isa::avx2)) {
    MESSAGE("AVX2 unavailable; only the scalar table is exercised");
    return;
  }
  const auto& s = kernels::table(kernels::Isa::scalar);
  const auto& v = kernels::table(kernels::Isa::avx2);
  for (std::size_t dim : {1u, 2u, 4u, 8u, 64u, 1024u, 1u << 14}) {
    const auto base = random_vector(dim, dim);
    const auto factors = random_vector(dim, dim + 1);
    const auto reals = random_reals(dim, dim + 2);

    auto a = base, b = base;
    s.walsh_hadamard(a);
    v.walsh_hadamard(b);
    CHECK(max_diff(a, b) < 1e-12);

    a = base, b = base;
    s.multiply(a, factors);
    v.multiply(b, factors);
    CHECK(max_diff(a, b) < 1e-12);

    std::vector<cplx> ya(dim), yb(dim);
    s.diagonal_multiply(reals, base, ya);
    v.diagonal_multiply(reals, base, yb);
    CHECK(max_diff(ya, yb) < 1e-12);

    ya = factors, yb = factors;
    s.axpy(cplx(0.3, -1.7), base, ya);
    v.axpy(cplx(0.3, -1.7), base, yb);
    CHECK(max_diff(ya, yb) < 1e-12);

    a = base, b = base;
    s.phase_rotate(a, reals, 0.731);
    v.phase_rotate(b, reals, 0.731);
    CHECK(max_diff(a, b) < 1e-12);

    CHECK(std::abs(s.squared_norm(base) - v.squared_norm(base)) < 1e-12 * s.squared_norm(base));
  }
}

TEST_CASE("forced isa selection") {
  kernels::force_isa(kernels::Isa::scalar);
  CHECK(kernels::active().isa == kernels::Isa::scalar);
  kernels::reset_isa();
  if (kernels::isa_available(kernels::Isa::avx2)) CHECK(kernels::active().isa == kernels::Isa::avx2);
}

TEST_CASE("phase rotation keeps magnitudes") {
  auto x = random_vector(256, 9);
  const auto original = x;
  kernels::phase_rotate(x, random_reals(256, 10), 2.5);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(std::abs(x[i]) - std::abs(original[i])) < 1e-14);
}
