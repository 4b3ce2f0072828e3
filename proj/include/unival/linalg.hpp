#pragma once

#include <stdexcept>
#include <vector>

#include "unival/pi_scalar.hpp"

namespace unival {

/*
 * Exact dense linear algebra over PiScalar.
 *
 * PiScalar only supports division by monomials, so Gaussian elimination
 * requires every pivot to be a single pi-term. All matrices in this
 * project are weighted-homogeneous -- entry (i, j) is a rational times
 * pi^(w_i + c_j) for fixed row/column weights -- and that structure is
 * preserved by row operations, so monomial pivots always exist. The
 * elimination prefers a monomial pivot among the candidate rows and
 * throws if none is available, which would signal a convention bug
 * upstream rather than a recoverable condition.
 */
using PiVec = std::vector<PiScalar>;
using PiMat = std::vector<PiVec>;

inline PiMat mat_from_columns(const std::vector<PiVec>& cols) {
  if (cols.empty()) return {};
  std::size_t rows = cols.front().size();
  for (const auto& c : cols)
    if (c.size() != rows) throw std::invalid_argument("mat_from_columns: ragged columns");
  PiMat m(rows, PiVec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

// Reduced row echelon form in place; returns the rank and optionally the
// pivot columns.
inline int rref(PiMat& m, std::vector<int>* pivot_cols = nullptr) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // prefer a monomial pivot; any nonzero would do mathematically but
    // only monomials are invertible in PiScalar
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (m[i][c].is_monomial()) {
        pivot = i;
        break;
      }
      if (pivot == rows) pivot = i;
    }
    if (pivot == rows) continue;
    if (!m[pivot][c].is_monomial())
      throw std::logic_error("rref: non-monomial pivot; matrix is not pi-graded");
    std::swap(m[pivot], m[r]);
    PiScalar inv_applied = m[r][c];
    for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j].div_monomial(inv_applied);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      PiScalar f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

inline int rank(PiMat m) { return rref(m); }

inline int rank_of_columns(const std::vector<PiVec>& cols) {
  PiMat m = mat_from_columns(cols);
  return rref(m);
}

// Solves A x = b with free variables set to zero. Returns false if the
// system is inconsistent.
inline bool solve(const PiMat& a, const PiVec& b, PiVec& x) {
  if (a.empty()) {
    for (const auto& v : b)
      if (!v.is_zero()) return false;
    x.clear();
    return true;
  }
  const std::size_t rows = a.size(), cols = a.front().size();
  if (b.size() != rows) throw std::invalid_argument("solve: size mismatch");
  PiMat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots;
  rref(aug, &pivots);
  x.assign(cols, PiScalar());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(cols)) return false; // pivot in the rhs column
    x[pivots[r]] = aug[r][cols];
  }
  return true;
}

// Basis of the null space of A (columns indexed 0..cols-1).
inline std::vector<PiVec> kernel_basis(const PiMat& a) {
  if (a.empty()) return {};
  const std::size_t cols = a.front().size();
  PiMat m = a;
  std::vector<int> pivots;
  rref(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<PiVec> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    PiVec v(cols, PiScalar());
    v[fc] = PiScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < static_cast<int>(fc)) v[pivots[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Is v contained in the span of the given columns?
inline bool span_contains(const std::vector<PiVec>& cols, const PiVec& v) {
  std::vector<PiVec> ext = cols;
  ext.push_back(v);
  return rank_of_columns(ext) == rank_of_columns(cols);
}

// Is span(a) a subspace of span(b)?
inline bool span_subset(const std::vector<PiVec>& a, const std::vector<PiVec>& b) {
  std::vector<PiVec> all = b;
  all.insert(all.end(), a.begin(), a.end());
  return rank_of_columns(all) == rank_of_columns(b);
}

// Columns spanning span(a) intersect span(b).
inline std::vector<PiVec> span_intersection(const std::vector<PiVec>& a,
                                            const std::vector<PiVec>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<PiVec> stacked = a;
  for (const auto& col : b) {
    PiVec neg(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) neg[i] = -col[i];
    stacked.push_back(std::move(neg));
  }
  PiMat m = mat_from_columns(stacked);
  std::vector<PiVec> null = kernel_basis(m);
  std::vector<PiVec> result;
  const std::size_t dim = a.front().size();
  for (const auto& k : null) {
    PiVec v(dim, PiScalar());
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
    bool nonzero = false;
    for (const auto& entry : v) nonzero = nonzero || !entry.is_zero();
    if (nonzero) result.push_back(std::move(v));
  }
  return result;
}

} // namespace unival
