#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "algser/compiler.hpp"
#include "algser/ffield.hpp"

namespace algser {

using BigIndex = boost::multiprecision::cpp_int;

/// Decimal digits only, no sign. Throws std::invalid_argument otherwise.
BigIndex parse_big_index(std::string_view decimal);

/// Least significant first; 0 gives {0}.
std::vector<std::uint32_t> digits_base_p(const BigIndex& n, std::uint32_t p);

/// Field operations actually executed by a query.
struct QueryStats {
  std::uint64_t field_ops = 0;
  std::uint64_t matvecs = 0;
};

/// A_r s, skipping zero entries of s.
std::vector<std::uint32_t> apply_digit(const CompiledSeries& cs, std::uint32_t r, std::span<const std::uint32_t> s,
                                       QueryStats* stats = nullptr);
/// u s.
std::uint32_t read_out(const CompiledSeries& cs, std::span<const std::uint32_t> s, QueryStats* stats = nullptr);

/// u A_{m_l} ... A_{m_0} v.
Fp h_coeff(const CompiledSeries& cs, const BigIndex& m, QueryStats* stats = nullptr);
/// Same product over an explicit digit string, least significant first.
Fp h_coeff_digits(const CompiledSeries& cs, std::span<const std::uint32_t> digits, QueryStats* stats = nullptr);

/// [x^n]c + sum_{m = max(0, n - deg a)}^{n} [x^{n-m}]a h_m.
Fp f_coeff(const CompiledSeries& cs, const BigIndex& n, QueryStats* stats = nullptr);

inline constexpr std::uint64_t kMaxRangeLength = std::uint64_t{1} << 24;

/// f_{n0}..f_{n1}. Throws std::invalid_argument if n0 > n1 and CapExceeded if
/// the range is longer than kMaxRangeLength. `threads` = 0 picks the hardware
/// concurrency.
std::vector<std::uint32_t> f_range(const CompiledSeries& cs, std::uint64_t n0, std::uint64_t n1,
                                   unsigned threads = 1);

}  // namespace algser
