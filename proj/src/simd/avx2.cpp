// AVX2 variants. Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "algser/simd/kernels.hpp"

namespace algser::simd::avx2 {

void scale_accumulate(std::span<std::uint64_t> acc, std::uint32_t s, std::span<const std::uint32_t> src) {
  const std::size_t n = src.size();
  const __m256i sv = _mm256_set1_epi64x(s);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i lo = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src.data() + i)));
    __m256i hi = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src.data() + i + 4)));
    __m256i* out0 = reinterpret_cast<__m256i*>(acc.data() + i);
    __m256i* out1 = reinterpret_cast<__m256i*>(acc.data() + i + 4);
    _mm256_storeu_si256(out0, _mm256_add_epi64(_mm256_loadu_si256(out0), _mm256_mul_epu32(lo, sv)));
    _mm256_storeu_si256(out1, _mm256_add_epi64(_mm256_loadu_si256(out1), _mm256_mul_epu32(hi, sv)));
  }
  const std::uint64_t w = s;
  for (; i < n; ++i) acc[i] += w * src[i];
}

std::uint64_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  const std::size_t n = a.size();
  __m256i even = _mm256_setzero_si256();
  __m256i odd = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    even = _mm256_add_epi64(even, _mm256_mul_epu32(x, y));
    odd = _mm256_add_epi64(odd, _mm256_mul_epu32(_mm256_srli_epi64(x, 32), _mm256_srli_epi64(y, 32)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(even, odd));
  std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) sum += static_cast<std::uint64_t>(a[i]) * b[i];
  return sum;
}

}  // namespace algser::simd::avx2
