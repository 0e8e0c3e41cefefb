#include <doctest.h>

#include <cmath>
#include <map>

#include "adiabatic/error.hpp"
#include "adiabatic/hamiltonian.hpp"
#include "adiabatic/spectral.hpp"
#include "oracles.hpp"

using namespace adiabatic;

namespace {

void check_matrix(const HermitianOperator& h, const Eigen::MatrixXd& expected, double tol = 1e-14) {
  REQUIRE(h.dim() == static_cast<Index>(expected.rows()));
  CHECK((h.real_part() - expected).cwiseAbs().maxCoeff() <= tol);
  if (!h.is_real()) CHECK(h.imag_part().cwiseAbs().maxCoeff() <= tol);
}

ProblemFamily general_perturbed(int n) {
  // threshold 0.6 n; tail p is non-increasing and ends at -1.
  const int k0 = first_perturbed_weight(n, 0.1);
  std::vector<double> tail;
  for (int k = k0; k <= n; ++k) tail.push_back(k == n ? -1.0 : 0.5 - 0.25 * (k - k0));
  return make_family(n, PerturbedParams{0.1, tail});
}

}  // namespace

TEST_CASE("final hamiltonian examples") {
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2, 2);
  expected(1, 1) = 1;
  check_matrix(build_final_hamiltonian(make_family(1, HammingWeightParams{}).cost), expected);

  check_matrix(build_final_hamiltonian(make_family(2, SearchParams{parse_bitstring("11")}).cost),
               oracle::diag({1, 1, 1, 0}));
  check_matrix(build_final_hamiltonian(make_spike_family(2).cost), oracle::diag({0, 1, 1, -1}));
}

TEST_CASE("initial hamiltonian examples") {
  Eigen::MatrixXd expected(2, 2);
  expected << 0.5, -0.5, -0.5, 0.5;
  check_matrix(build_initial_hamiltonian(make_family(1, HammingWeightParams{}).initial_cost), expected);
  check_matrix(build_initial_hamiltonian(make_family(1, SearchParams{1}).initial_cost), expected);
}

TEST_CASE("initial hamiltonian equals W diag(h) W") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& family : {make_family(n, HammingWeightParams{}), make_family(n, SearchParams{1})}) {
      check_matrix(build_initial_hamiltonian(family.initial_cost), oracle::initial_hamiltonian(family), 1e-12);
    }
  }
}

TEST_CASE("invalid h is rejected") {
  const CostFunction nonzero_origin(2, [](Index z) { return z == 0 ? 0.5 : 1.0; }, false, FamilyTag::custom);
  CHECK_THROWS_AS(build_initial_hamiltonian(nonzero_origin), ContractViolation);
  const CostFunction small(2, [](Index z) { return z == 0 ? 0.0 : 0.5; }, false, FamilyTag::custom);
  CHECK_THROWS_AS(build_initial_hamiltonian(small), ContractViolation);
}

TEST_CASE("dense limit is enforced") {
  CHECK_THROWS_AS(build_final_hamiltonian(make_family(15, HammingWeightParams{}).cost), CapacityError);
  CHECK_THROWS_AS(build_initial_hamiltonian(make_family(8, HammingWeightParams{}).initial_cost, 6), CapacityError);
}

TEST_CASE("interpolation") {
  const auto family = make_family(1, HammingWeightParams{});
  const auto h0 = build_initial_hamiltonian(family.initial_cost);
  const auto hf = build_final_hamiltonian(family.cost);
  check_matrix(interpolate(h0, hf, 0.0), h0.real_part(), 0.0);
  check_matrix(interpolate(h0, hf, 1.0), hf.real_part(), 0.0);
  Eigen::MatrixXd half(2, 2);
  half << 0.25, -0.25, -0.25, 0.75;
  check_matrix(interpolate(h0, hf, 0.5), half);
  CHECK_THROWS_AS(interpolate(h0, hf, 1.5), DomainError);
  CHECK_THROWS_AS(interpolate(h0, hf, -0.1), DomainError);
  const auto other = build_final_hamiltonian(make_family(2, HammingWeightParams{}).cost);
  CHECK_THROWS_AS(interpolate(h0, other, 0.5), ShapeError);
}

TEST_CASE("interpolation is affine") {
  const auto family = make_spike_family(5);
  const auto h0 = build_initial_hamiltonian(family.initial_cost);
  const auto hf = build_final_hamiltonian(family.cost);
  for (double s : {0.1, 0.37, 0.5, 0.93}) {
    const Eigen::MatrixXd expected = h0.real_part() + s * (hf.real_part() - h0.real_part());
    check_matrix(interpolate(h0, hf, s), expected, 1e-14);
  }
}

TEST_CASE("built operators are Hermitian") {
  const auto family = general_perturbed(6);
  const auto h = interpolate(build_initial_hamiltonian(family.initial_cost), build_final_hamiltonian(family.cost), 0.3);
  const Eigen::MatrixXcd m = h.to_complex();
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianOperator(bad, Basis::computational), ContractViolation);
}

TEST_CASE("cost tables") {
  const auto spike = make_spike_family(3).cost.tabulate();
  CHECK(spike == std::vector<double>{0, 1, 1, 2, 1, 2, 2, -1});
  CHECK(make_family(2, HammingWeightParams{}).cost.tabulate() == std::vector<double>{0, 1, 1, 2});
  CHECK(is_spike_family(make_spike_family(7)));
  CHECK_FALSE(is_spike_family(make_family(7, HammingWeightParams{})));
}

TEST_CASE("perturbed family validation") {
  CHECK_THROWS_AS(make_family(4, PerturbedParams{0.1, {-1.0, 0.0}}), ContractViolation);
  CHECK_THROWS_AS(make_family(4, PerturbedParams{0.1, {0.0, -0.5}}), ContractViolation);
  CHECK_THROWS_AS(make_family(4, PerturbedParams{0.5, {-1.0}}), DomainError);
  const auto family = general_perturbed(8);
  CHECK(family.supports_dicke());
  CHECK(family.cost.at_weight(8) == -1.0);
  CHECK(family.cost.at_weight(3) == 3.0);
}

TEST_CASE("hamming weight spectrum has binomial multiplicities") {
  for (int n = 1; n <= 12; ++n) {
    const auto hf = build_final_hamiltonian(make_family(n, HammingWeightParams{}).cost);
    std::map<int, int> counts;
    for (Eigen::Index i = 0; i < hf.real_part().rows(); ++i) counts[static_cast<int>(std::lround(hf.real_part()(i, i)))]++;
    for (int k = 0; k <= n; ++k) CHECK(counts[k] == static_cast<int>(binomial(n, k)));
    if (n <= 8) {
      const auto ev = eigenvalues(hf);
      std::size_t pos = 0;
      for (int k = 0; k <= n; ++k) {
        for (int m = 0; m < static_cast<int>(binomial(n, k)); ++m) CHECK(std::abs(ev[pos++] - k) < 1e-12);
      }
    }
  }
}

TEST_CASE("dicke reduction of a single qubit is the two-level matrix") {
  const auto family = make_family(1, HammingWeightParams{});
  for (double s : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    Eigen::MatrixXd expected(2, 2);
    expected << 1 - s, s - 1, s - 1, 1 + s;
    expected *= 0.5;
    check_matrix(build_dicke_reduction(family, s), expected, 1e-15);
  }
}

TEST_CASE("dicke reduction at s = 1 is the weight profile") {
  const auto h = build_dicke_reduction(make_spike_family(6), 1.0);
  check_matrix(h, oracle::diag({0, 1, 2, 3, 4, 5, -1}), 0.0);
  CHECK_THROWS_AS(build_dicke_reduction(make_family(3, SearchParams{2}), 0.5), UnsupportedFamily);
}

TEST_CASE("dicke levels match dense levels") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& family : {make_family(n, HammingWeightParams{}), general_perturbed(n), make_spike_family(n)}) {
      for (double s : uniform_grid(101)) {
        const auto dense = oracle::spectrum(oracle::hamiltonian(family, s));
        const auto reduced = eigenvalues(build_dicke_reduction(family, s));
        CHECK(std::abs(dense[0] - reduced[0]) < 1e-10);
        if (family.tag() != FamilyTag::perturbed || is_spike_family(family)) CHECK(std::abs(dense[1] - reduced[1]) < 1e-10);
        const auto [l0, l1] = two_lowest(family, s, Backend::dicke);
        CHECK(std::abs(dense[0] - l0) < 1e-10);
        CHECK(std::abs(dense[1] - l1) < 1e-10);
      }
    }
  }
}

TEST_CASE("first excited level outside the symmetric sector") {
  // f = 0 on weight 7 ties with f(0^n): most of those strings are not symmetric.
  const auto family = make_family(8, PerturbedParams{0.1, {0.5, 0.25, 0.0, -1.0}});
  double worst = 0;
  for (double s : uniform_grid(51)) {
    const auto dense = oracle::spectrum(oracle::hamiltonian(family, s));
    const auto symmetric = eigenvalues(build_dicke_reduction(family, s));
    worst = std::max(worst, symmetric[1] - dense[1]);
    CHECK(std::abs(two_lowest(family, s, Backend::dicke).second - dense[1]) < 1e-10);
  }
  CHECK(worst > 1e-2);
}

TEST_CASE("spin sectors reproduce the full spectrum") {
  const auto family = general_perturbed(6);
  const double s = 0.41;
  std::vector<double> combined;
  for (int two_j = 6; two_j >= 0; two_j -= 2) {
    const auto ev = eigenvalues(spin_sector(family, s, two_j));
    const int mult = static_cast<int>(spin_sector_multiplicity(6, two_j));
    for (int m = 0; m < mult; ++m) combined.insert(combined.end(), ev.begin(), ev.end());
  }
  std::sort(combined.begin(), combined.end());
  const auto dense = oracle::spectrum(oracle::hamiltonian(family, s));
  REQUIRE(combined.size() == dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) CHECK(std::abs(combined[i] - dense[i]) < 1e-10);
}
