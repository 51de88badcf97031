#include "gv/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace gv {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::size_t mat_rank(QMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat factor = m.at(i, col) / m.at(rank, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) -= factor * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

SolveResult solve_linear(const QMatrix& m, const std::vector<Rat>& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve_linear: size mismatch");
  // Eliminate on the augmented matrix [m | b].
  QMatrix w(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, m.cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < w.rows; ++col) {
    std::size_t piv = row;
    while (piv < w.rows && w.at(piv, col) == 0) ++piv;
    if (piv == w.rows) continue;
    if (piv != row)
      for (std::size_t j = 0; j <= m.cols; ++j) std::swap(w.at(piv, j), w.at(row, j));
    for (std::size_t i = 0; i < w.rows; ++i) {
      if (i == row || w.at(i, col) == 0) continue;
      Rat factor = w.at(i, col) / w.at(row, col);
      for (std::size_t j = col; j <= m.cols; ++j)
        w.at(i, j) -= factor * w.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() < m.cols) return {SolveStatus::rank_deficient, {}};
  for (std::size_t i = row; i < w.rows; ++i)
    if (w.at(i, m.cols) != 0) return {SolveStatus::not_in_span, {}};
  std::vector<Rat> x(m.cols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[pivot_col[r]] = w.at(r, m.cols) / w.at(r, pivot_col[r]);
  return {SolveStatus::ok, std::move(x)};
}

LpResult lp_nonneg_feasible(const QMatrix& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows) throw std::invalid_argument("lp_nonneg_feasible: size mismatch");
  const std::size_t m = a.rows;
  const std::size_t n = a.cols;
  if (m == 0) return {true, std::vector<Rat>(n)};

  // Phase-I tableau: columns 0..n-1 original, n..n+m-1 artificial.
  // Row i: sum_j T[i][j] x_j = rhs[i], with rhs >= 0 after sign fixing.
  QMatrix t(m, n + m);
  std::vector<Rat> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sign = (b[i] < 0) ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * a.at(i, j);
    t.at(i, n + i) = 1;
    rhs[i] = sign * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Minimise the sum of artificials. Reduced cost of column j is
  // c_j - sum_i T[i][j] over the basic artificial rows; maintained implicitly.
  auto reduced_cost = [&](std::size_t j) {
    Rat rc = (j >= n) ? Rat(1) : Rat(0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n) rc -= t.at(i, j);
    return rc;
  };

  for (;;) {
    // Bland: smallest-index column with negative reduced cost.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (reduced_cost(j) < 0) { enter = j; break; }
    }
    if (enter == n + m) break;  // optimal
    // Ratio test; ties broken by smallest basis variable index (Bland).
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.at(i, enter) <= 0) continue;
      Rat ratio = rhs[i] / t.at(i, enter);
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m)
      throw std::logic_error("phase-I unbounded: artificial objective is bounded below");
    // Pivot.
    Rat p = t.at(leave, enter);
    for (std::size_t j = 0; j < n + m; ++j) t.at(leave, j) /= p;
    rhs[leave] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t.at(i, enter) == 0) continue;
      Rat f = t.at(i, enter);
      for (std::size_t j = 0; j < n + m; ++j) t.at(i, j) -= f * t.at(leave, j);
      rhs[i] -= f * rhs[leave];
    }
    basis[leave] = enter;
  }

  Rat artificial_sum = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) artificial_sum += rhs[i];
  if (artificial_sum != 0) return {false, {}};

  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = rhs[i];
  return {true, std::move(x)};
}

}  // namespace gv
