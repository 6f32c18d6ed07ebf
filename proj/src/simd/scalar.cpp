#include "toric/simd.hpp"

namespace toric::simd::scalar {

bool conforms(std::span<const std::int64_t> g, std::span<const std::int64_t> u) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::int64_t gi = g[i];
    const std::int64_t ui = u[i];
    if (gi > 0 && gi > (ui > 0 ? ui : 0)) return false;
    if (gi < 0 && gi < (ui < 0 ? ui : 0)) return false;
  }
  return true;
}

bool add(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out) {
  bool ok = true;
  for (std::size_t i = 0; i < a.size(); ++i) ok &= !__builtin_add_overflow(a[i], b[i], &out[i]);
  return ok;
}

bool sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out) {
  bool ok = true;
  for (std::size_t i = 0; i < a.size(); ++i) ok &= !__builtin_sub_overflow(a[i], b[i], &out[i]);
  return ok;
}

}  // namespace toric::simd::scalar
