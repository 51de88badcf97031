#pragma once

#include <cstddef>
#include <vector>

#include "gv/rat.hpp"

namespace gv {

// Dense rational matrix, row major.
struct QMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> a;

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static QMatrix identity(std::size_t n);
  QMatrix transposed() const;
};

// Rank over Q by fraction-exact Gaussian elimination. Empty matrix has rank 0.
std::size_t mat_rank(QMatrix m);

enum class SolveStatus {
  ok,              // unique solution found and verified
  rank_deficient,  // column rank < cols; "unique x" contract cannot hold
  not_in_span,     // full column rank but b outside the column span
};

struct SolveResult {
  SolveStatus status = SolveStatus::rank_deficient;
  std::vector<Rat> x;  // valid iff status == ok
};

// Solves m x = b exactly. Distinguishes a deficient basis from a right-hand
// side outside the span, so callers can tell a basis bug from bad input.
SolveResult solve_linear(const QMatrix& m, const std::vector<Rat>& b);

struct LpResult {
  bool feasible = false;
  std::vector<Rat> x;  // witness with x >= 0 and a x = b, when feasible
};

// Exact Phase-I simplex (Bland's rule) for { x >= 0 : a x = b }.
LpResult lp_nonneg_feasible(const QMatrix& a, const std::vector<Rat>& b);

}  // namespace gv
