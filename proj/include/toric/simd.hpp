#pragma once

// Inner-loop kernels over int64 coordinate arrays. Every kernel has a scalar
// reference implementation; wider variants are picked at startup from what
// the CPU reports and must agree with the scalar one bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace toric::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  /// g+ <= u+ and g- <= u- componentwise. Spans have equal length.
  bool (*conforms)(std::span<const std::int64_t> g, std::span<const std::int64_t> u);
  /// out = a + b; returns false if any lane overflowed (out is then unspecified).
  bool (*add)(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);
  /// out = a - b; returns false if any lane overflowed.
  bool (*sub)(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);
};

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;

/// Kernels of a specific instruction set. Throws std::invalid_argument if the
/// CPU (or this build) does not support it.
const KernelTable& kernels_for(Isa isa);

/// Currently active kernels; the widest supported set unless overridden.
const KernelTable& kernels() noexcept;

/// Override the active kernel set (tests and benchmarks).
void select_isa(Isa isa);

namespace scalar {
bool conforms(std::span<const std::int64_t> g, std::span<const std::int64_t> u);
bool add(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);
bool sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);
}  // namespace scalar

#if defined(TORIC_HAVE_AVX2)
namespace avx2 {
bool conforms(std::span<const std::int64_t> g, std::span<const std::int64_t> u);
bool add(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);
bool sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);
}  // namespace avx2
#endif

}  // namespace toric::simd
