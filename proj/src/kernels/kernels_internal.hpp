#pragma once

#include "mcmgr/kernels.hpp"

namespace mcmgr::kernels {

void axpy_scalar(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p);
void scale_scalar(Elem* dst, Elem c, std::size_t n, std::uint32_t p);
Elem dot_scalar(const Elem* a, const Elem* b, std::size_t n, std::uint32_t p);

// Defined only in the variant translation units that are compiled in.
const KernelSet* avx2_kernels_compiled();
const KernelSet* neon_kernels_compiled();

}  // namespace mcmgr::kernels
