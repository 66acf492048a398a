#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "algser/polyring.hpp"

namespace algser {

/// Row-major matrix of polynomials sharing one modulus.
class PolyMatrix {
 public:
  PolyMatrix(PrimeModulus m, std::size_t rows, std::size_t cols);
  /// Rows must be non-empty and of equal length.
  static PolyMatrix from_rows(PrimeModulus m, const std::vector<std::vector<PolyFp>>& rows);

  PrimeModulus modulus() const noexcept { return m_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  PolyFp& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const PolyFp& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  /// Submatrix on the given row and column indices, in the given order.
  PolyMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

 private:
  PrimeModulus m_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<PolyFp> e_;
};

/// Exact determinant via fraction-free (Bareiss) elimination with exact
/// polynomial division. Throws std::invalid_argument if not square.
PolyFp poly_det(const PolyMatrix& m);

/// Rank over the fraction field F_p(x).
std::size_t poly_rank(const PolyMatrix& m);

/// Given d+1 vectors of length d whose entries have degree <= c, returns
/// d_1..d_{d+1}, not all zero, with sum d_i v_i = 0 and deg d_i <= d*c.
/// The result is primitive (common gcd divided out) and its first nonzero
/// entry is monic. Postconditions are verified on every call and raise
/// InternalDefect if violated.
std::vector<PolyFp> dependency(std::span<const std::vector<PolyFp>> vectors, Degree c);

}  // namespace algser
