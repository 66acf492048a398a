#include "algser/simd/kernels.hpp"

namespace algser::simd::scalar {

void scale_accumulate(std::span<std::uint64_t> acc, std::uint32_t s, std::span<const std::uint32_t> src) {
  const std::uint64_t w = s;
  for (std::size_t i = 0; i < src.size(); ++i) acc[i] += w * src[i];
}

std::uint64_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += static_cast<std::uint64_t>(a[i]) * b[i];
  return sum;
}

}  // namespace algser::simd::scalar
