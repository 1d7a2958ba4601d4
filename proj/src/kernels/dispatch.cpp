#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace mcmgr::kernels {

#if !defined(MCMGR_HAVE_AVX2)
const KernelSet* avx2_kernels_compiled() { return nullptr; }
#endif
#if !defined(MCMGR_HAVE_NEON)
const KernelSet* neon_kernels_compiled() { return nullptr; }
#endif

const KernelSet* avx2_kernels() {
#if defined(MCMGR_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  if (__builtin_cpu_supports("avx2")) return avx2_kernels_compiled();
#endif
  return nullptr;
}

const KernelSet* neon_kernels() {
#if defined(MCMGR_HAVE_NEON)
  return neon_kernels_compiled();
#else
  return nullptr;
#endif
}

namespace {

const KernelSet* select_default() {
  if (const char* env = std::getenv("MCMGR_KERNELS"); env != nullptr && std::string_view(env) == "scalar") {
    return &scalar_kernels();
  }
  if (const KernelSet* set = avx2_kernels()) return set;
  if (const KernelSet* set = neon_kernels()) return set;
  return &scalar_kernels();
}

std::atomic<const KernelSet*>& active_slot() {
  static std::atomic<const KernelSet*> slot{select_default()};
  return slot;
}

}  // namespace

const KernelSet& active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

void set_active_kernels(const KernelSet& set) { active_slot().store(&set, std::memory_order_relaxed); }

}  // namespace mcmgr::kernels
