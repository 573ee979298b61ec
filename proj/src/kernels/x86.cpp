// SSE2 and AVX2 variants. SSE2 is the x86-64 baseline; the AVX2 functions
// are compiled with a target attribute and only installed after a CPUID
// check, so the rest of the library stays portable.
#include "eulerform/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace eulerform::kernels::detail {
namespace {

// Exponents stay below 2^15, so the signed 16-bit max is exact.
std::ptrdiff_t find_divisor_sse2(const Exponents* candidates, std::size_t n,
                                 const Exponents& target) {
  const __m128i t = _mm_load_si128(reinterpret_cast<const __m128i*>(target.e.data()));
  for (std::size_t i = 0; i < n; ++i) {
    const __m128i c = _mm_load_si128(reinterpret_cast<const __m128i*>(candidates[i].e.data()));
    const __m128i eq = _mm_cmpeq_epi16(_mm_max_epi16(c, t), t);
    if (_mm_movemask_epi8(eq) == 0xFFFF) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

void shift_sse2(const Exponents* src, std::size_t n, const Exponents& by, Exponents* dst) {
  const __m128i b = _mm_load_si128(reinterpret_cast<const __m128i*>(by.e.data()));
  for (std::size_t i = 0; i < n; ++i) {
    const __m128i s = _mm_load_si128(reinterpret_cast<const __m128i*>(src[i].e.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(dst[i].e.data()), _mm_add_epi16(s, b));
  }
}

void axpy_mod_sse2(std::uint32_t* row, const std::uint32_t* src, std::uint32_t factor,
                   std::uint32_t p, std::size_t n) {
  const double neg = static_cast<double>((p - factor % p) % p);
  const __m128d vp = _mm_set1_pd(static_cast<double>(p));
  const __m128d vinv = _mm_set1_pd(1.0 / static_cast<double>(p));
  const __m128d vneg = _mm_set1_pd(neg);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m128i r32 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(row + i));
    const __m128i s32 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(src + i));
    // All values < 2^31, exact in double.
    __m128d x = _mm_add_pd(_mm_cvtepi32_pd(r32), _mm_mul_pd(vneg, _mm_cvtepi32_pd(s32)));
    __m128d q = _mm_cvtepi32_pd(_mm_cvttpd_epi32(_mm_mul_pd(x, vinv)));
    x = _mm_sub_pd(x, _mm_mul_pd(q, vp));
    x = _mm_add_pd(x, _mm_and_pd(_mm_cmplt_pd(x, _mm_setzero_pd()), vp));
    x = _mm_sub_pd(x, _mm_and_pd(_mm_cmpge_pd(x, vp), vp));
    _mm_storel_epi64(reinterpret_cast<__m128i*>(row + i), _mm_cvttpd_epi32(x));
  }
  if (i < n) scalar_table().axpy_mod(row + i, src + i, factor, p, n - i);
}

__attribute__((target("avx2"))) std::ptrdiff_t find_divisor_avx2(const Exponents* candidates,
                                                                  std::size_t n,
                                                                  const Exponents& target) {
  const __m128i t1 = _mm_load_si128(reinterpret_cast<const __m128i*>(target.e.data()));
  const __m256i t = _mm256_broadcastsi128_si256(t1);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(candidates[i].e.data()));
    const auto mask = static_cast<std::uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi16(_mm256_max_epi16(c, t), t)));
    if ((mask & 0xFFFFu) == 0xFFFFu) return static_cast<std::ptrdiff_t>(i);
    if ((mask >> 16) == 0xFFFFu) return static_cast<std::ptrdiff_t>(i + 1);
  }
  if (i < n) {
    const __m128i c = _mm_load_si128(reinterpret_cast<const __m128i*>(candidates[i].e.data()));
    if (_mm_movemask_epi8(_mm_cmpeq_epi16(_mm_max_epi16(c, t1), t1)) == 0xFFFF)
      return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

__attribute__((target("avx2"))) void shift_avx2(const Exponents* src, std::size_t n,
                                                const Exponents& by, Exponents* dst) {
  const __m128i b1 = _mm_load_si128(reinterpret_cast<const __m128i*>(by.e.data()));
  const __m256i b = _mm256_broadcastsi128_si256(b1);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src[i].e.data()));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst[i].e.data()), _mm256_add_epi16(s, b));
  }
  if (i < n) {
    const __m128i s = _mm_load_si128(reinterpret_cast<const __m128i*>(src[i].e.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(dst[i].e.data()), _mm_add_epi16(s, b1));
  }
}

__attribute__((target("avx2"))) void axpy_mod_avx2(std::uint32_t* row, const std::uint32_t* src,
                                                   std::uint32_t factor, std::uint32_t p,
                                                   std::size_t n) {
  const auto neg = static_cast<int>((p - factor % p) % p);
  const __m256i vneg = _mm256_set1_epi32(neg);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // p < 2^15 keeps r + neg * s below 2^31.
    const __m256i x = _mm256_add_epi32(r, _mm256_mullo_epi32(vneg, s));
    const __m128i qlo = _mm256_cvttpd_epi32(
        _mm256_mul_pd(_mm256_cvtepi32_pd(_mm256_castsi256_si128(x)), vinv));
    const __m128i qhi = _mm256_cvttpd_epi32(
        _mm256_mul_pd(_mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1)), vinv));
    const __m256i q = _mm256_inserti128_si256(_mm256_castsi128_si256(qlo), qhi, 1);
    __m256i y = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
    y = _mm256_add_epi32(y, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), y), vp));
    y = _mm256_sub_epi32(y, _mm256_and_si256(_mm256_cmpgt_epi32(y, vpm1), vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), y);
  }
  if (i < n) scalar_table().axpy_mod(row + i, src + i, factor, p, n - i);
}

const KernelTable kSse2{"sse2", find_divisor_sse2, shift_sse2, axpy_mod_sse2};
const KernelTable kAvx2{"avx2", find_divisor_avx2, shift_avx2, axpy_mod_avx2};

}  // namespace

const KernelTable* sse2_table() { return &kSse2; }

const KernelTable* avx2_table() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

}  // namespace eulerform::kernels::detail

#else

namespace eulerform::kernels::detail {
const KernelTable* sse2_table() { return nullptr; }
const KernelTable* avx2_table() { return nullptr; }
}  // namespace eulerform::kernels::detail

#endif
