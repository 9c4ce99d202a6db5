#pragma once

#include "ngg/kernels.hpp"

// Backend factories. Each lives in its own translation unit so that
// ISA-specific compile flags never leak into code that runs on every CPU.
// A factory existing does not mean the CPU can run it; dispatch checks that.
namespace ngg::kernel {

const Kernels* scalar_kernels();

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
#define NGG_KERNEL_X86 1
const Kernels* ssse3_kernels();
const Kernels* avx2_kernels();
#endif

#if defined(__ARM_NEON) || defined(__ARM_NEON__) || defined(__aarch64__)
#define NGG_KERNEL_NEON 1
const Kernels* neon_kernels();
#endif

void compose_generic(std::uint8_t* dst, const std::uint8_t* f,
                     const std::uint8_t* g, std::size_t width);

}  // namespace ngg::kernel
