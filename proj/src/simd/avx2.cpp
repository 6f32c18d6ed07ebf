// Compiled with -mavx2; only reached when the CPU reports AVX2.

#include "toric/simd.hpp"

#include <immintrin.h>

namespace toric::simd::avx2 {

namespace {

inline __m256i load(const std::int64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline bool any_sign_bit(__m256i v) { return _mm256_movemask_pd(_mm256_castsi256_pd(v)) != 0; }

}  // namespace

bool conforms(std::span<const std::int64_t> g, std::span<const std::int64_t> u) {
  const std::size_t n = g.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i gv = load(g.data() + i);
    const __m256i uv = load(u.data() + i);
    // max(x, 0) and min(x, 0) via the sign mask
    const __m256i gneg = _mm256_cmpgt_epi64(zero, gv);
    const __m256i uneg = _mm256_cmpgt_epi64(zero, uv);
    const __m256i gpos_part = _mm256_andnot_si256(gneg, gv);
    const __m256i upos_part = _mm256_andnot_si256(uneg, uv);
    const __m256i gneg_part = _mm256_and_si256(gneg, gv);
    const __m256i uneg_part = _mm256_and_si256(uneg, uv);
    const __m256i bad = _mm256_or_si256(_mm256_cmpgt_epi64(gpos_part, upos_part),
                                        _mm256_cmpgt_epi64(uneg_part, gneg_part));
    if (!_mm256_testz_si256(bad, bad)) return false;
  }
  return scalar::conforms(g.subspan(i), u.subspan(i));
}

bool add(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out) {
  const std::size_t n = a.size();
  __m256i overflow = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i av = load(a.data() + i);
    const __m256i bv = load(b.data() + i);
    const __m256i s = _mm256_add_epi64(av, bv);
    // overflow iff a and b share a sign that s does not
    overflow = _mm256_or_si256(overflow, _mm256_and_si256(_mm256_xor_si256(av, s), _mm256_xor_si256(bv, s)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), s);
  }
  const bool tail_ok = scalar::add(a.subspan(i), b.subspan(i), out.subspan(i));
  return tail_ok && !any_sign_bit(overflow);
}

bool sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out) {
  const std::size_t n = a.size();
  __m256i overflow = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i av = load(a.data() + i);
    const __m256i bv = load(b.data() + i);
    const __m256i d = _mm256_sub_epi64(av, bv);
    // overflow iff a and b differ in sign and d differs from a
    overflow = _mm256_or_si256(overflow, _mm256_and_si256(_mm256_xor_si256(av, bv), _mm256_xor_si256(av, d)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), d);
  }
  const bool tail_ok = scalar::sub(a.subspan(i), b.subspan(i), out.subspan(i));
  return tail_ok && !any_sign_bit(overflow);
}

}  // namespace toric::simd::avx2
