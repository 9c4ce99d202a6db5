#include "kernels_impl.hpp"

#ifdef NGG_KERNEL_NEON

#include <arm_neon.h>

namespace ngg::kernel {
namespace {

void compose_neon(std::uint8_t* dst, const std::uint8_t* f,
                  const std::uint8_t* g, std::size_t width) {
  if (width == slot16) {
    vst1q_u8(dst, vqtbl1q_u8(vld1q_u8(f), vld1q_u8(g)));
  } else if (width == slot32) {
    uint8x16x2_t table{vld1q_u8(f), vld1q_u8(f + 16)};
    vst1q_u8(dst, vqtbl2q_u8(table, vld1q_u8(g)));
    vst1q_u8(dst + 16, vqtbl2q_u8(table, vld1q_u8(g + 16)));
  } else {
    compose_generic(dst, f, g, width);
  }
}

void idempotent_scan_neon(std::uint8_t* flags, const std::uint8_t* slots,
                          std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    uint8x16_t m = vld1q_u8(slots + k * slot16);
    uint8x16_t sq = vqtbl1q_u8(m, m);
    flags[k] = static_cast<std::uint8_t>(vminvq_u8(vceqq_u8(sq, m)) == 0xFF);
  }
}

constexpr Kernels kNeon{"neon", &compose_neon, &idempotent_scan_neon};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

}  // namespace ngg::kernel

#endif  // NGG_KERNEL_NEON
