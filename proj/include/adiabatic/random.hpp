#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace adiabatic {

/**
 * Counter-based pseudo-random generator.
 *
 * Output k of a stream is a pure function of (key, k), so results do not
 * depend on evaluation order and independent streams are derived with
 * split(). Distributions are implemented here rather than with <random>
 * so that sequences are identical across standard libraries.
 */
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Independent child stream; does not advance this stream.
  CounterRng split(std::uint64_t stream) const;

  /// Uniform on [0, 1).
  double uniform();
  double normal();
  std::complex<double> complex_normal();

  std::uint64_t below(std::uint64_t bound);

  static std::uint64_t mix(std::uint64_t x);

 private:
  CounterRng(std::uint64_t key, int) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace adiabatic
