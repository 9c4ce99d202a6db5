#include "kernels_impl.hpp"

namespace ngg::kernel {

void compose_generic(std::uint8_t* dst, const std::uint8_t* f,
                     const std::uint8_t* g, std::size_t width) {
  for (std::size_t i = 0; i < width; ++i) {
    dst[i] = f[g[i]];
  }
}

namespace {

void idempotent_scan_scalar(std::uint8_t* flags, const std::uint8_t* slots,
                            std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint8_t* m = slots + k * slot16;
    std::uint8_t ok = 1;
    for (std::size_t i = 0; i < slot16; ++i) {
      ok &= static_cast<std::uint8_t>(m[m[i]] == m[i]);
    }
    flags[k] = ok;
  }
}

constexpr Kernels kScalar{"scalar", &compose_generic, &idempotent_scan_scalar};

}  // namespace

const Kernels* scalar_kernels() { return &kScalar; }

}  // namespace ngg::kernel
