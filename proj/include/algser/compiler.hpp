#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "algser/mahler.hpp"
#include "algser/polyring.hpp"

namespace algser {

/// Square matrix over F_p, stored column-major so that a matrix-column
/// product is a sum of scaled columns.
class FpMatrix {
 public:
  FpMatrix() = default;
  explicit FpMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t dim() const noexcept { return n_; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[c * n_ + r]; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[c * n_ + r]; }
  std::span<const std::uint32_t> column(std::size_t c) const { return {data_.data() + c * n_, n_}; }
  std::size_t nonzeros() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> data_;
};

/// f = c_0 g, g = g_- + h, h = b + sum_i d_i h(x^{p^i}).
struct ChangeOfVariable {
  LaurentPolyFp g_minus{PrimeModulus(2)};
  PolyFp b{PrimeModulus(2)};
  std::vector<PolyFp> d;  // d_1..d_k
  std::size_t D = 0;
  std::uint32_t h0 = 0;
  /// Nonnegative part of f/c_0, to the precision of the prefix.
  SeriesTrunc h_prefix{PrimeModulus(2), 0};
};

inline constexpr std::size_t kDefaultMaxDim = 4096;

/// Linear representation of f: h_m = u A_{m_l} ... A_{m_0} v and
/// f_n = [x^n]c + sum_m [x^{n-m}]a h_m.
///
/// Basis layout: index block*(D+1) + j, where block 0 holds x^j and block
/// i+1 holds x^j h(x^{p^i}), i = 0..k.
struct CompiledSeries {
  PrimeModulus p{2};
  PolyFp a{PrimeModulus(2)};
  PolyFp c{PrimeModulus(2)};
  std::size_t e = 0;
  std::vector<std::uint32_t> u;
  std::vector<FpMatrix> A;
  std::vector<std::uint32_t> v;
  std::size_t k = 0;
  std::size_t D = 0;
  std::uint32_t h0 = 0;
  std::vector<PolyFp> mahler;
  std::string source;

  std::size_t index(std::size_t block, std::size_t j) const noexcept { return block * (D + 1) + j; }
  /// Coordinates of f itself: c in block 0, a in block 1.
  std::vector<std::uint32_t> f_coordinates() const;

  friend bool operator==(const CompiledSeries&, const CompiledSeries&) = default;
};

/// Throws std::invalid_argument if the prefix has fewer than deg c_0 + 1
/// terms, InternalDefect if b keeps negative exponents.
ChangeOfVariable change_of_variable(const MahlerEquation& eq, std::span<const std::uint32_t> prefix);

/// Builds the matrices of S_0..S_{p-1}. Throws CapExceeded if e > max_dim and
/// InternalDefect if a structural check fails.
CompiledSeries build_representation(const MahlerEquation& eq, const ChangeOfVariable& cov,
                                    std::size_t max_dim = kDefaultMaxDim);

/// Full pipeline: honest-input gate, Mahler equation, change of variable,
/// matrices. Throws DishonestInput if the prefix fails the gate.
CompiledSeries compile_series(const BiPolyFp& e, std::span<const std::uint32_t> prefix,
                              std::size_t max_dim = kDefaultMaxDim, std::string source = {});

nlohmann::json to_json(const CompiledSeries& cs);
/// Throws SchemaError naming the offending field.
CompiledSeries compiled_from_json(const nlohmann::json& doc);

/// Polynomial as an array of naturals, constant term first.
nlohmann::json poly_to_json(const PolyFp& a);

}  // namespace algser
