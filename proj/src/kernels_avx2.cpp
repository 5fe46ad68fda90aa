#include "loopideal/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>
#endif

namespace loopideal {
namespace kern {

#if defined(__x86_64__) && defined(__AVX2__)

namespace {

bool avx2_leq(const u32* a, const u32* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // unsigned a <= b  <=>  min(a, b) == a
    __m256i ok = _mm256_cmpeq_epi32(_mm256_min_epu32(va, vb), va);
    if (_mm256_movemask_epi8(ok) != -1) return false;
  }
  for (; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool avx2_eq(const u32* a, const u32* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(va, vb)) != -1) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

void avx2_vmin(u32* dst, const u32* a, const u32* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epu32(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] < b[i] ? a[i] : b[i];
}

void avx2_vmax(u32* dst, const u32* a, const u32* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_max_epu32(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] > b[i] ? a[i] : b[i];
}

void avx2_vadd(u32* dst, const u32* a, const u32* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi32(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}

void avx2_vsub(u32* dst, const u32* a, const u32* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_sub_epi32(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}

u64 avx2_vsum(const u32* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(va)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(va, 1)));
  }
  alignas(32) u64 lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  u64 s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) s += a[i];
  return s;
}

const Backend kAvx2 = {
    "avx2",    avx2_leq,  avx2_eq,   avx2_vmin,
    avx2_vmax, avx2_vadd, avx2_vsub, avx2_vsum,
};

}  // namespace

const Backend* avx2_backend() {
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

#else

const Backend* avx2_backend() { return nullptr; }

#endif

}  // namespace kern
}  // namespace loopideal
