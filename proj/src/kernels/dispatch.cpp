#include <atomic>

#include "adiabatic/error.hpp"
#include "adiabatic/kernels.hpp"

namespace adiabatic::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(ADIABATIC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* best_table() {
#if defined(ADIABATIC_HAVE_AVX2_KERNELS)
  if (cpu_has_avx2()) return &detail::avx2_table();
#endif
  return &detail::scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> selected{best_table()};
  return selected;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& table(Isa isa) {
  if (!isa_available(isa)) throw ContractViolation(std::string("kernel ISA not available: ") + isa_name(isa));
#if defined(ADIABATIC_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) return detail::avx2_table();
#endif
  return detail::scalar_table();
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) { current().store(&table(isa)); }

void reset_isa() { current().store(best_table()); }

}  // namespace adiabatic::kernels
