#include "algser/polylinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "algser/errors.hpp"

namespace algser {

PolyMatrix::PolyMatrix(PrimeModulus m, std::size_t rows, std::size_t cols)
    : m_(m), rows_(rows), cols_(cols), e_(rows * cols, PolyFp(m)) {}

PolyMatrix PolyMatrix::from_rows(PrimeModulus m, const std::vector<std::vector<PolyFp>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix out(m, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged polynomial matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].modulus() == m)) throw std::invalid_argument("modulus mismatch in polynomial matrix");
      out.at(r, c) = rows[r][c];
    }
  }
  return out;
}

PolyMatrix PolyMatrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix out(m_, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = at(rows[r], cols[c]);
  }
  return out;
}

PolyFp poly_det(const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const PrimeModulus m = input.modulus();
  if (n == 0) return PolyFp::constant(m, 1);
  PolyMatrix a = input;
  bool negate = false;
  PolyFp prev = PolyFp::constant(m, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return PolyFp(m);
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = div_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      }
    }
    prev = a.at(k, k);
  }
  return negate ? -a.at(n - 1, n - 1) : a.at(n - 1, n - 1);
}

std::size_t poly_rank(const PolyMatrix& input) {
  PolyMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  PolyFp prev = PolyFp::constant(a.modulus(), 1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a.at(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(rank, j), a.at(pivot, j));
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a.at(i, j) = div_exact(a.at(i, j) * a.at(rank, c) - a.at(i, c) * a.at(rank, j), prev);
      }
      a.at(i, c) = PolyFp(a.modulus());
    }
    prev = a.at(rank, c);
    ++rank;
  }
  return rank;
}

namespace {

void verify_dependency(std::span<const std::vector<PolyFp>> v, const std::vector<PolyFp>& coeffs, Degree bound) {
  const PrimeModulus m = coeffs.front().modulus();
  const std::size_t dim = v.front().size();
  for (std::size_t c = 0; c < dim; ++c) {
    PolyFp sum(m);
    for (std::size_t i = 0; i < v.size(); ++i) sum += coeffs[i] * v[i][c];
    if (!sum.is_zero()) throw InternalDefect("dependency does not vanish");
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const PolyFp& p) { return p.is_zero(); })) {
    throw InternalDefect("dependency is trivial");
  }
  for (const auto& p : coeffs) {
    if (p.degree() > bound) throw InternalDefect("dependency exceeds the degree bound");
  }
}

}  // namespace

std::vector<PolyFp> dependency(std::span<const std::vector<PolyFp>> v, Degree c) {
  if (v.empty()) throw std::invalid_argument("dependency needs at least one vector");
  const std::size_t count = v.size();
  const std::size_t dim = count - 1;
  PrimeModulus m = v.front().empty() ? PrimeModulus(2) : v.front().front().modulus();
  for (const auto& vec : v) {
    if (vec.size() != dim) throw std::invalid_argument("dependency needs d+1 vectors of length d");
    for (const auto& entry : vec) {
      if (entry.degree() > c) throw std::invalid_argument("vector entry exceeds the stated degree bound");
      m = entry.modulus();
    }
  }

  std::vector<PolyFp> out(count, PolyFp(m));
  const Degree bound = c < 0 ? 0 : static_cast<Degree>(dim) * c;

  std::vector<std::vector<PolyFp>> rows(v.begin(), v.end());
  const bool all_zero = std::all_of(rows.begin(), rows.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const PolyFp& p) { return p.is_zero(); });
  });
  if (all_zero) {
    out[0] = PolyFp::constant(m, 1);
    verify_dependency(v, out, bound);
    return out;
  }

  const PolyMatrix full = PolyMatrix::from_rows(m, rows);
  std::vector<std::size_t> all_rows(count);
  for (std::size_t i = 0; i < count; ++i) all_rows[i] = i;

  // Maximal independent column set, greedy from the lowest index.
  std::vector<std::size_t> cols;
  for (std::size_t col = 0; col < dim; ++col) {
    cols.push_back(col);
    if (poly_rank(full.select(all_rows, cols)) != cols.size()) cols.pop_back();
  }
  const PolyMatrix w = full.select(all_rows, cols);
  const std::size_t rank = cols.size();

  // Row set I with det W_I != 0, and the excluded row j.
  std::vector<std::size_t> keep;
  std::size_t excluded = count;
  if (rank == dim) {
    for (std::size_t j = 0; j < count; ++j) {
      std::vector<std::size_t> trial;
      for (std::size_t i = 0; i < count; ++i) {
        if (i != j) trial.push_back(i);
      }
      if (!poly_det(w.select(trial, std::vector<std::size_t>(all_rows.begin(), all_rows.begin() + rank))).is_zero()) {
        keep = std::move(trial);
        excluded = j;
        break;
      }
    }
  } else {
    std::vector<std::size_t> all_cols(rank);
    for (std::size_t i = 0; i < rank; ++i) all_cols[i] = i;
    for (std::size_t i = 0; i < count && keep.size() < rank; ++i) {
      keep.push_back(i);
      if (poly_rank(w.select(keep, all_cols)) != keep.size()) keep.pop_back();
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (std::find(keep.begin(), keep.end(), i) == keep.end()) {
        excluded = i;
        break;
      }
    }
  }
  if (excluded == count || keep.size() != rank) throw InternalDefect("no nonsingular row subset found");

  std::vector<std::size_t> wcols(rank);
  for (std::size_t i = 0; i < rank; ++i) wcols[i] = i;
  const PolyMatrix mi = w.select(keep, wcols);
  out[excluded] = poly_det(mi);
  // Cramer: replace row t of M_I by -v_j.
  for (std::size_t t = 0; t < keep.size(); ++t) {
    PolyMatrix n = mi;
    for (std::size_t col = 0; col < rank; ++col) n.at(t, col) = -w.at(excluded, col);
    out[keep[t]] = poly_det(n);
  }

  PolyFp g(m);
  for (const auto& p : out) g = gcd(g, p);
  for (auto& p : out) {
    if (!p.is_zero()) p = div_exact(p, g);
  }
  for (const auto& p : out) {
    if (!p.is_zero()) {
      const std::uint32_t scale = m.inv(p.coeffs().back());
      for (auto& q : out) q = q.scaled(scale);
      break;
    }
  }
  verify_dependency(v, out, bound);
  return out;
}

}  // namespace algser
