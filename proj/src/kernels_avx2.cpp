#include "kernels_impl.hpp"

#ifdef NGG_KERNEL_X86

#include <immintrin.h>

namespace ngg::kernel {
namespace {

inline __m128i load128(const std::uint8_t* p) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

inline __m256i load256(const std::uint8_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

void compose_avx2(std::uint8_t* dst, const std::uint8_t* f,
                  const std::uint8_t* g, std::size_t width) {
  if (width == slot16) {
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst),
                     _mm_shuffle_epi8(load128(f), load128(g)));
  } else if (width == slot32) {
    // Both 16-byte halves of f broadcast to both lanes; vpshufb picks per
    // lane by idx & 15, the blend resolves bit 4 (moved to bit 7 by the
    // 16-bit shift, which cannot pull set bits into position 7 from the
    // neighbouring byte because indices are < 32).
    __m256i lo = _mm256_broadcastsi128_si256(load128(f));
    __m256i hi = _mm256_broadcastsi128_si256(load128(f + 16));
    __m256i idx = load256(g);
    __m256i r_lo = _mm256_shuffle_epi8(lo, idx);
    __m256i r_hi = _mm256_shuffle_epi8(hi, idx);
    __m256i sel = _mm256_slli_epi16(idx, 3);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst),
                        _mm256_blendv_epi8(r_lo, r_hi, sel));
  } else {
    compose_generic(dst, f, g, width);
  }
}

void idempotent_scan_avx2(std::uint8_t* flags, const std::uint8_t* slots,
                          std::size_t count) {
  std::size_t k = 0;
  // vpshufb shuffles within each 128-bit lane, so one 256-bit op squares two
  // independent slots at once.
  for (; k + 2 <= count; k += 2) {
    __m256i m = load256(slots + k * slot16);
    __m256i sq = _mm256_shuffle_epi8(m, m);
    unsigned mask = static_cast<unsigned>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(sq, m)));
    flags[k] = static_cast<std::uint8_t>((mask & 0xFFFFu) == 0xFFFFu);
    flags[k + 1] = static_cast<std::uint8_t>((mask >> 16) == 0xFFFFu);
  }
  if (k < count) {
    __m128i m = load128(slots + k * slot16);
    __m128i sq = _mm_shuffle_epi8(m, m);
    int mask = _mm_movemask_epi8(_mm_cmpeq_epi8(sq, m));
    flags[k] = static_cast<std::uint8_t>(mask == 0xFFFF);
  }
}

constexpr Kernels kAvx2{"avx2", &compose_avx2, &idempotent_scan_avx2};

}  // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

}  // namespace ngg::kernel

#endif  // NGG_KERNEL_X86
