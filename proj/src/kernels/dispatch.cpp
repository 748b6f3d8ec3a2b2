#include "weylac/error.hpp"
#include "weylac/kernels.hpp"

#include <atomic>
#include <string>

namespace weylac::kernels {

namespace {
std::atomic<const KernelTable*> g_active{nullptr};
}

std::string_view to_string(Isa isa) {
  switch (isa) {
  case Isa::scalar: return "scalar";
  case Isa::avx2: return "avx2";
  }
  return "?";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  throw ParameterError("unknown instruction set '" + std::string(name) + "' (expected scalar or avx2)");
}

bool supported(Isa isa) noexcept {
  switch (isa) {
  case Isa::scalar: return true;
  case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
  }
  return false;
}

Isa best_available() noexcept { return supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

const KernelTable& table(Isa isa) {
  if (!supported(isa)) throw ParameterError("instruction set " + std::string(to_string(isa)) + " is not available on this CPU");
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::avx2) return detail::avx2_table;
#endif
  return detail::scalar_table;
}

const KernelTable& active() noexcept {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = &table(best_available());
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void select(Isa isa) { g_active.store(&table(isa), std::memory_order_release); }

} // namespace weylac::kernels
