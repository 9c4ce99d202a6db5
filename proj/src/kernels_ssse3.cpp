#include "kernels_impl.hpp"

#ifdef NGG_KERNEL_X86

#include <tmmintrin.h>

namespace ngg::kernel {
namespace {

inline __m128i load(const std::uint8_t* p) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

inline void store(std::uint8_t* p, __m128i v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), v);
}

// 32-entry table lookup from two 16-byte halves. Saturating add of 0x70
// pushes out-of-half indices past 0x80 so pshufb zeroes them; OR merges.
inline __m128i lookup32(__m128i lo, __m128i hi, __m128i idx) {
  const __m128i bias = _mm_set1_epi8(0x70);
  __m128i r_lo = _mm_shuffle_epi8(lo, _mm_adds_epu8(idx, bias));
  __m128i idx_hi = _mm_xor_si128(idx, _mm_set1_epi8(0x10));
  __m128i r_hi = _mm_shuffle_epi8(hi, _mm_adds_epu8(idx_hi, bias));
  return _mm_or_si128(r_lo, r_hi);
}

void compose_ssse3(std::uint8_t* dst, const std::uint8_t* f,
                   const std::uint8_t* g, std::size_t width) {
  if (width == slot16) {
    store(dst, _mm_shuffle_epi8(load(f), load(g)));
  } else if (width == slot32) {
    __m128i lo = load(f);
    __m128i hi = load(f + 16);
    store(dst, lookup32(lo, hi, load(g)));
    store(dst + 16, lookup32(lo, hi, load(g + 16)));
  } else {
    compose_generic(dst, f, g, width);
  }
}

void idempotent_scan_ssse3(std::uint8_t* flags, const std::uint8_t* slots,
                           std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    __m128i m = load(slots + k * slot16);
    __m128i sq = _mm_shuffle_epi8(m, m);
    int mask = _mm_movemask_epi8(_mm_cmpeq_epi8(sq, m));
    flags[k] = static_cast<std::uint8_t>(mask == 0xFFFF);
  }
}

constexpr Kernels kSsse3{"ssse3", &compose_ssse3, &idempotent_scan_ssse3};

}  // namespace

const Kernels* ssse3_kernels() { return &kSsse3; }

}  // namespace ngg::kernel

#endif  // NGG_KERNEL_X86
