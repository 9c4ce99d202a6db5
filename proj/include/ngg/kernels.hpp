#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ngg::kernel {

/// Transformations are stored as zero-indexed byte images padded to a slot
/// width with an identity tail (buf[i] = i for i >= degree). Kernels operate
/// on the whole slot; the tail is preserved automatically because for
/// i >= degree we have g[i] = i and f[i] = i, hence f[g[i]] = i. This is what
/// makes whole-slot equality and SIMD shuffles valid regardless of degree.
inline constexpr std::size_t slot16 = 16;
inline constexpr std::size_t slot32 = 32;

constexpr std::size_t slot_width(std::size_t degree) {
  return degree <= slot16 ? slot16 : (degree <= slot32 ? slot32 : degree);
}

/// dst[i] = f[g[i]] for i in [0, width). dst must not alias f or g.
/// width is a slot width: 16, 32, or the exact degree beyond 32.
using ComposeFn = void (*)(std::uint8_t* dst, const std::uint8_t* f,
                           const std::uint8_t* g, std::size_t width);

/// slots: `count` consecutive 16-byte slots (identity-padded, degree <= 16).
/// flags[k] = 1 iff slot k composed with itself equals itself.
using IdempotentScanFn = void (*)(std::uint8_t* flags, const std::uint8_t* slots,
                                  std::size_t count);

struct Kernels {
  std::string_view name;
  ComposeFn compose;
  IdempotentScanFn idempotent_scan;
};

/// The backend selected at load time: best instruction set the CPU supports,
/// overridable with the NGG_KERNEL environment variable (scalar, ssse3, avx2,
/// neon). All backends compute identical bytes; the override exists for
/// testing and benchmarking.
const Kernels& active();

/// Lookup by name among backends usable on this CPU; nullptr otherwise.
const Kernels* by_name(std::string_view name);

/// All usable backends, scalar first.
const std::vector<const Kernels*>& available();

}  // namespace ngg::kernel
