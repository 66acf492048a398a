#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "algser/bipoly.hpp"
#include "algser/polyring.hpp"

namespace algser {

inline constexpr std::size_t kDefaultMaxBranches = 100000;

/// Truncated roots of E, sorted lexicographically by coefficients.
struct SolutionSet {
  std::size_t precision = 0;
  std::vector<SeriesTrunc> roots;
  /// False if the branch cap cut the search short.
  bool complete = true;
};

/// All f mod x^N that pass the branch-and-prune search: each surviving branch
/// satisfies E(x, f) = 0 mod x^N. `prefix` fixes the first coefficients.
/// Throws std::invalid_argument if deg_y E = 0.
SolutionSet solve_series(const BiPolyFp& e, std::size_t precision, std::span<const std::uint32_t> prefix = {},
                         std::size_t max_branches = kDefaultMaxBranches);

/// True iff E(x, prefix) = 0 mod x^len(prefix).
bool verify_prefix(const BiPolyFp& e, std::span<const std::uint32_t> prefix);

/// Coefficient n of the unique oracle root extending `prefix`. Throws
/// DishonestInput if no root survives and std::domain_error if several do.
Fp naive_coeff(const BiPolyFp& e, std::span<const std::uint32_t> prefix, std::size_t n);

/// Least n with f_n != g_n. Throws std::invalid_argument on a precision mismatch.
std::optional<std::size_t> first_divergence(const SeriesTrunc& f, const SeriesTrunc& g);

/// (d+1)(p^d - d + 1) deg_x P with d = deg_y P >= 1.
BigInt bound_h(std::uint32_t p, const BiPolyZ& poly);
/// The same expression evaluated on E.
BigInt bound_corollary_g(const BiPolyFp& e);
/// (d^2 + d - 4)/2 deg_x P; requires d >= 2.
BigInt bound_prop_h(const BiPolyZ& poly);

}  // namespace algser
