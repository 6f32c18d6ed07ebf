#include "toric/simd.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace toric::simd {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::conforms, &scalar::add, &scalar::sub};

#if defined(TORIC_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::conforms, &avx2::add, &avx2::sub};
#endif

const KernelTable* detect() noexcept {
#if defined(TORIC_HAVE_AVX2)
  if (isa_supported(Isa::Avx2)) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const KernelTable*>& active() noexcept {
  static std::atomic<const KernelTable*> table{detect()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(TORIC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
#if defined(TORIC_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& kernels() noexcept { return *active().load(std::memory_order_relaxed); }

void select_isa(Isa isa) { active().store(&kernels_for(isa), std::memory_order_relaxed); }

}  // namespace toric::simd
