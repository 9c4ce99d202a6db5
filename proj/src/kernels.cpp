#include "ngg/kernels.hpp"

#include <cstdlib>

#include "kernels_impl.hpp"

namespace ngg::kernel {
namespace {

std::vector<const Kernels*> discover() {
  std::vector<const Kernels*> out;
  out.push_back(scalar_kernels());
#ifdef NGG_KERNEL_X86
  if (__builtin_cpu_supports("ssse3")) {
    out.push_back(ssse3_kernels());
  }
  if (__builtin_cpu_supports("avx2")) {
    out.push_back(avx2_kernels());
  }
#endif
#ifdef NGG_KERNEL_NEON
  out.push_back(neon_kernels());
#endif
  return out;
}

const Kernels* select() {
  const auto& all = available();
  if (const char* wanted = std::getenv("NGG_KERNEL")) {
    for (const Kernels* k : all) {
      if (k->name == wanted) {
        return k;
      }
    }
    // Unknown or unavailable name: fall through to the default. Every
    // backend computes the same bytes, so this cannot change results.
  }
  return all.back();
}

}  // namespace

const std::vector<const Kernels*>& available() {
  static const std::vector<const Kernels*> kAvailable = discover();
  return kAvailable;
}

const Kernels* by_name(std::string_view name) {
  for (const Kernels* k : available()) {
    if (k->name == name) {
      return k;
    }
  }
  return nullptr;
}

const Kernels& active() {
  static const Kernels* kActive = select();
  return *kActive;
}

}  // namespace ngg::kernel
