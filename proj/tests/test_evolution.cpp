#include <doctest.h>

#include <cmath>
#include <numbers>

#include "adiabatic/error.hpp"
#include "adiabatic/evolution.hpp"
#include "adiabatic/lower_bound.hpp"
#include "oracles.hpp"

using namespace adiabatic;

TEST_CASE("constant schedule") {
  const auto s = make_constant_schedule(10);
  CHECK(s.total_delay == 10.0);
  CHECK(s.tau(0.3) == 10.0);
  CHECK_THROWS_AS(make_constant_schedule(0), DomainError);
  CHECK_THROWS_AS(make_constant_schedule(-1), DomainError);
}

TEST_CASE("adaptive schedule delays") {
  auto gap1 = [](double s) { return oracle::search_gap(1, s); };
  CHECK(std::abs(make_adaptive_schedule(gap1, 1).total_delay - std::numbers::pi / 2) < 1e-10);
  auto gap2 = [](double s) { return oracle::search_gap(2, s); };
  CHECK(std::abs(make_adaptive_schedule(gap2, 1).total_delay - 4 * std::atan(std::sqrt(3.0)) / std::sqrt(3.0)) < 1e-10);
  CHECK_THROWS_AS(make_adaptive_schedule([](double s) { return s - 0.5; }, 1), SingularSchedule);
}

TEST_CASE("closed-form search delay") {
  CHECK(std::abs(closed_form_search_delay(1) - std::numbers::pi / 2) < 1e-14);
  for (int n = 1; n <= 12; ++n) {
    CHECK(std::abs(closed_form_search_delay(n) - oracle::search_delay(n)) < 1e-12 * oracle::search_delay(n));
    const auto row = compare_search_delay(n, 5.0);
    CHECK(row.relative_error < 1e-8);
    const double direct = integrate_delay([n](double s) { return 5.0 / std::pow(oracle::search_gap(n, s), 2); });
    CHECK(std::abs(direct - 5 * oracle::search_delay(n)) < 1e-8 * direct);
  }
  CHECK(std::abs(closed_form_search_delay(20) / std::sqrt(std::ldexp(1.0, 20)) - std::numbers::pi / 2) <
        0.01 * std::numbers::pi / 2);
}

TEST_CASE("ground states") {
  const int n = 4;
  const auto family = make_family(n, HammingWeightParams{});
  const auto g0 = ground_state(family, 0.0, Backend::dense);
  CHECK(overlap(g0, uniform_superposition(n)) > 1 - 1e-12);
  const auto g1 = ground_state(family, 1.0, Backend::dense);
  CHECK(overlap(g1, basis_state(n, 0)) > 1 - 1e-12);
  for (double s : {0.2, 0.5, 0.8}) {
    const Eigen::Vector2d v0 = qubit_eigenvectors(s).col(0);
    StateVector product{n, Basis::computational, std::vector<cplx>(16)};
    for (Index z = 0; z < 16; ++z) {
      double a = 1;
      for (int i = 1; i <= n; ++i) a *= v0(bit_at(z, n, i));
      product.amplitudes[z] = a;
    }
    CHECK(overlap(ground_state(family, s, Backend::dense), product) > 1 - 1e-12);
    const auto reduced = expand_dicke(ground_state(family, s, Backend::dicke));
    CHECK(overlap(reduced, product) > 1 - 1e-12);
  }
  const auto spike = make_spike_family(24);
  CHECK_THROWS_AS(ground_state(spike, reduced_critical_point(24, 0.0), Backend::dicke), DegenerateGround);
}

TEST_CASE("overlap and success probability") {
  const auto family = make_family(3, HammingWeightParams{});
  const auto result = integrate(family, make_constant_schedule(2.0), Backend::dense);
  double norm2 = 0;
  for (const auto& a : result.final_state.amplitudes) norm2 += std::norm(a);
  CHECK(success_probability(result, result.final_state) == doctest::Approx(norm2 * norm2).epsilon(1e-12));
  StateVector orthogonal{3, Basis::computational, std::vector<cplx>(8)};
  const auto& a = result.final_state.amplitudes;
  orthogonal.amplitudes[0] = std::conj(a[1]);
  orthogonal.amplitudes[1] = -std::conj(a[0]);
  CHECK(success_probability(result, orthogonal) < 1e-24);
  CHECK_THROWS_AS(overlap(basis_state(3, 0), basis_state(4, 0)), ShapeError);
}

TEST_CASE("constant schedule solves the hamming weight problem") {
  const auto family = make_family(4, HammingWeightParams{});
  for (Backend backend : {Backend::dense, Backend::dicke}) {
    const auto result = integrate(family, make_constant_schedule(30), backend);
    CHECK(result.overlap_ground >= 0.99);
    CHECK(result.norm_drift <= 1e-6);
    CHECK(result.step_change < 1e-6);
  }
}

TEST_CASE("dense and dicke evolutions agree") {
  const auto family = make_spike_family(5);
  const auto dense = integrate(family, make_constant_schedule(12), Backend::dense);
  const auto dicke = integrate(family, make_constant_schedule(12), Backend::dicke);
  const auto expanded = expand_dicke(dicke.final_state);
  CHECK(oracle::distance(dense.final_state.amplitudes, expanded.amplitudes) < 1e-5);
  CHECK(std::abs(dense.overlap_ground - dicke.overlap_ground) < 1e-6);
}

TEST_CASE("adaptive search schedule reaches the marked string") {
  const int n = 6;
  for (Index u : {Index{0}, Index{45}}) {
    const auto family = make_family(n, SearchParams{u});
    const auto schedule = make_adaptive_schedule(gap_function(family, Backend::dense), 5.0);
    CHECK(std::abs(schedule.total_delay - 5 * oracle::search_delay(n)) < 1e-6 * schedule.total_delay);
    const auto result = integrate(family, schedule, Backend::dense);
    CHECK(overlap(result.final_state, basis_state(n, u)) >= 0.9);
    CHECK(result.norm_drift <= 1e-6);
  }
}

TEST_CASE("very short evolution leaves the state unchanged") {
  for (const auto& family : {make_family(5, HammingWeightParams{}), make_spike_family(5), make_family(5, SearchParams{7})}) {
    const auto result = integrate(family, make_constant_schedule(1e-3), Backend::dense);
    CHECK(overlap(result.final_state, uniform_superposition(5)) >= 0.999);
  }
}

TEST_CASE("matrix-free hamiltonian matches the oracle matrix") {
  const auto family = make_spike_family(5);
  const FullSpaceHamiltonian h(family);
  std::vector<cplx> psi(32), out(32);
  for (std::size_t i = 0; i < 32; ++i) psi[i] = cplx(std::cos(1.0 * i), std::sin(0.3 * i));
  const double s = 0.37;
  h.apply(s, psi, out);
  const Eigen::MatrixXd m = oracle::hamiltonian(family, s);
  const Eigen::VectorXcd expected = m.cast<cplx>() * Eigen::Map<Eigen::VectorXcd>(psi.data(), 32);
  for (std::size_t i = 0; i < 32; ++i) CHECK(std::abs(out[i] - expected(static_cast<Eigen::Index>(i))) < 1e-12);
}

TEST_CASE("integrator reports failure when the step budget is too small") {
  IntegrateOptions options;
  options.max_steps = 64;
  options.tolerance = 1e-12;
  CHECK_THROWS_AS(integrate(make_spike_family(6), make_constant_schedule(200), Backend::dense, options), AccuracyError);
}
