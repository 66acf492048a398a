#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "algser/bipoly.hpp"
#include "algser/polyring.hpp"

namespace algser {

/// a_{d,n} f^n = sum_{i<d} a_{i,n} f^i for any root f of E.
struct PowerRep {
  std::uint64_t n = 0;
  std::vector<PolyFp> numer;
  PolyFp lead{PrimeModulus(2)};
};

/// Largest p^d for which derive_mahler runs the power recurrence.
inline constexpr std::uint64_t kMaxMahlerPower = std::uint64_t{1} << 20;

/// PowerRep for f^n, given a_0..a_d = [y^i]E. Throws std::invalid_argument if
/// d = 0 or a_d = 0, InternalDefect if the degree bound
/// max_i deg a_{i,n} <= (n-d+1) deg_x E fails.
PowerRep power_representation(std::span<const PolyFp> a, std::uint64_t n);

/// sum_{i=0}^{k} coeffs[i](x) f(x^{p^i}) = 0, coeffs[0] != 0.
struct MahlerEquation {
  PrimeModulus modulus{2};
  std::vector<PolyFp> coeffs;
  std::uint32_t d = 0;
  std::uint32_t deg_x = 0;

  std::size_t k() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// k = 0: the relation c_0 f = 0 forces f = 0.
  bool forces_zero() const noexcept { return coeffs.size() == 1; }
};

/// Intermediate data of one derivation, for inspection and bound checks.
struct MahlerTrace {
  std::vector<PowerRep> reps;         // n = 1, p, ..., p^d
  Degree entry_bound = kMinusInfinity;  // c fed to the dependency
  std::vector<PolyFp> dependency;     // e_0..e_d
  std::vector<PolyFp> raw;            // d_i = e_i a_{d,p^i}
  std::size_t shift = 0;              // j, number of sections applied
  std::vector<std::uint32_t> digits;  // section digits, in order of application
};

/// Throws std::invalid_argument if deg_y E = 0, CapExceeded if p^d exceeds
/// kMaxMahlerPower, InternalDefect if a degree bound is violated.
MahlerEquation derive_mahler(const BiPolyFp& e);
MahlerEquation derive_mahler_traced(const BiPolyFp& e, MahlerTrace& trace);

/// sum c_i f(x^{p^i}) to the precision of f.
SeriesTrunc mahler_residual(const MahlerEquation& eq, const SeriesTrunc& f);

}  // namespace algser
