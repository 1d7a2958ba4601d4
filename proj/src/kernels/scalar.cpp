#include "kernels_internal.hpp"

namespace mcmgr::kernels {

void axpy_scalar(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<Elem>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
  }
}

void scale_scalar(Elem* dst, Elem c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<Elem>(static_cast<std::uint64_t>(c) * dst[i] % p);
  }
}

Elem dot_scalar(const Elem* a, const Elem* b, std::size_t n, std::uint32_t p) {
  constexpr std::uint64_t kFold = std::uint64_t{1} << 63;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
    if (acc >= kFold) acc %= p;
  }
  return static_cast<Elem>(acc % p);
}

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", &axpy_scalar, &scale_scalar, &dot_scalar};
  return set;
}

}  // namespace mcmgr::kernels
