#include <atomic>

#include "algser/simd/kernels.hpp"

namespace algser::simd {

#if defined(ALGSER_HAVE_AVX2)
namespace avx2 {
void scale_accumulate(std::span<std::uint64_t>, std::uint32_t, std::span<const std::uint32_t>);
std::uint64_t dot(std::span<const std::uint32_t>, std::span<const std::uint32_t>);
}  // namespace avx2
#endif

#if defined(ALGSER_HAVE_NEON)
namespace neon {
void scale_accumulate(std::span<std::uint64_t>, std::uint32_t, std::span<const std::uint32_t>);
std::uint64_t dot(std::span<const std::uint32_t>, std::span<const std::uint32_t>);
}  // namespace neon
#endif

namespace {

constexpr KernelTable kScalar{Isa::kScalar, &scalar::scale_accumulate, &scalar::dot};
#if defined(ALGSER_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::kAvx2, &avx2::scale_accumulate, &avx2::dot};
#endif
#if defined(ALGSER_HAVE_NEON)
constexpr KernelTable kNeon{Isa::kNeon, &neon::scale_accumulate, &neon::dot};
#endif

bool cpu_has_avx2() noexcept {
#if defined(ALGSER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{table_for(detect_isa())};
  return current;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return &kScalar;
    case Isa::kAvx2:
#if defined(ALGSER_HAVE_AVX2)
      return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
    case Isa::kNeon:
#if defined(ALGSER_HAVE_NEON)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Isa detect_isa() noexcept {
  if (table_for(Isa::kAvx2) != nullptr) return Isa::kAvx2;
  if (table_for(Isa::kNeon) != nullptr) return Isa::kNeon;
  return Isa::kScalar;
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

ScopedIsa::ScopedIsa(Isa isa) : previous_(slot().load()) {
  const KernelTable* t = table_for(isa);
  slot().store(t != nullptr ? t : &kScalar);
}

ScopedIsa::~ScopedIsa() { slot().store(previous_); }

}  // namespace algser::simd
