#pragma once

// Wide-accumulator kernels behind the polynomial and matrix arithmetic.
//
// Residues are uint32 values below p <= 2^16, so each product is below 2^32
// and up to 2^32 products can be summed in a uint64 lane without reduction.
// Callers reduce once at the end.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace algser::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;

/// Table of kernel entry points for one instruction set.
struct KernelTable {
  Isa isa;
  /// acc[i] += s * src[i] for i < src.size(). acc.size() >= src.size().
  void (*scale_accumulate)(std::span<std::uint64_t> acc, std::uint32_t s,
                           std::span<const std::uint32_t> src);
  /// Sum of a[i] * b[i]. a.size() == b.size().
  std::uint64_t (*dot)(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
};

/// Kernels for a specific ISA; nullptr if not compiled in or not supported by the CPU.
const KernelTable* table_for(Isa isa) noexcept;

/// Best ISA available on this machine.
Isa detect_isa() noexcept;

/// Currently active kernels (detected at first use).
const KernelTable& active() noexcept;

/// Overrides the active ISA for the lifetime of the guard. Test hook; not
/// thread-safe with respect to concurrent kernel calls.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa);
  ~ScopedIsa();
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  const KernelTable* previous_;
};

inline void scale_accumulate(std::span<std::uint64_t> acc, std::uint32_t s,
                             std::span<const std::uint32_t> src) {
  active().scale_accumulate(acc, s, src);
}

inline std::uint64_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return active().dot(a, b);
}

namespace scalar {
void scale_accumulate(std::span<std::uint64_t> acc, std::uint32_t s, std::span<const std::uint32_t> src);
std::uint64_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
}  // namespace scalar

}  // namespace algser::simd
