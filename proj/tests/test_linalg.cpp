#include <doctest.h>

#include <random>

#include "gv/linalg.hpp"
#include "oracles.hpp"

using gv::QMatrix;
using gv::Rat;

namespace {

QMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<Rat> rats(const std::vector<long>& v) {
  return std::vector<Rat>(v.begin(), v.end());
}

Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();  // mpq_class(n, d) stores the pair verbatim
  return r;
}

}  // namespace

TEST_CASE("mat_rank on fixed matrices") {
  CHECK(gv::mat_rank(QMatrix::identity(2)) == 2);
  CHECK(gv::mat_rank(from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == 1);
  CHECK(gv::mat_rank(QMatrix()) == 0);
  CHECK(gv::mat_rank(from_rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("mat_rank equals rank of the transpose") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<std::size_t> sz(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    QMatrix m(sz(rng), sz(rng));
    for (auto& e : m.a) e = frac(num(rng), den(rng));
    CHECK(gv::mat_rank(m) == gv::mat_rank(m.transposed()));
  }
}

TEST_CASE("solve_linear fixed examples") {
  auto r = gv::solve_linear(QMatrix::identity(2), rats({3, 5}));
  REQUIRE(r.status == gv::SolveStatus::ok);
  CHECK(r.x == rats({3, 5}));

  // columns (1,0) and (1,1)
  r = gv::solve_linear(from_rows({{1, 1}, {0, 1}}), rats({2, 1}));
  REQUIRE(r.status == gv::SolveStatus::ok);
  CHECK(r.x == rats({1, 1}));
}

TEST_CASE("solve_linear distinguishes rank deficiency from span failure") {
  // dependent columns
  auto r = gv::solve_linear(from_rows({{1, 2}, {2, 4}}), rats({1, 2}));
  CHECK(r.status == gv::SolveStatus::rank_deficient);

  // full column rank, rhs outside the span
  r = gv::solve_linear(from_rows({{1}, {0}}), rats({0, 1}));
  CHECK(r.status == gv::SolveStatus::not_in_span);

  // tall full-rank system with consistent rhs
  r = gv::solve_linear(from_rows({{1, 0}, {0, 1}, {1, 1}}), rats({2, 3, 5}));
  REQUIRE(r.status == gv::SolveStatus::ok);
  CHECK(r.x == rats({2, 3}));
}

TEST_CASE("solve_linear re-substitution on random rational systems") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 4;
    QMatrix m(n + trial % 2, n);
    for (auto& e : m.a) e = frac(num(rng), den(rng));
    // build b inside the span so ok/rank_deficient are the only outcomes
    std::vector<Rat> xs(n);
    for (auto& e : xs) e = frac(num(rng), den(rng));
    std::vector<Rat> b(m.rows, Rat(0));
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += m.at(i, j) * xs[j];
    auto r = gv::solve_linear(m, b);
    if (r.status != gv::SolveStatus::ok) {
      CHECK(r.status == gv::SolveStatus::rank_deficient);
      CHECK(gv::mat_rank(m) < n);
      continue;
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += m.at(i, j) * r.x[j];
      CHECK(acc == b[i]);
    }
  }
}

TEST_CASE("lp_nonneg_feasible fixed examples") {
  CHECK_FALSE(gv::lp_nonneg_feasible(from_rows({{1}}), rats({-1})).feasible);

  auto r = gv::lp_nonneg_feasible(QMatrix::identity(2), rats({2, 0}));
  REQUIRE(r.feasible);
  CHECK(r.x == rats({2, 0}));

  // b = 0 is always feasible with x = 0
  r = gv::lp_nonneg_feasible(from_rows({{1, -1}}), rats({0}));
  REQUIRE(r.feasible);
  Rat acc = r.x[0] - r.x[1];
  CHECK(acc == 0);
}

TEST_CASE("lp_nonneg_feasible witness satisfies the system") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 80; ++trial) {
    QMatrix a(1 + trial % 3, 1 + (trial / 3) % 4);
    for (auto& e : a.a) e = num(rng);
    std::vector<Rat> b(a.rows);
    for (auto& e : b) e = num(rng);
    auto r = gv::lp_nonneg_feasible(a, b);
    if (!r.feasible) continue;
    REQUIRE(r.x.size() == a.cols);
    for (const auto& v : r.x) CHECK(v >= 0);
    for (std::size_t i = 0; i < a.rows; ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < a.cols; ++j) acc += a.at(i, j) * r.x[j];
      CHECK(acc == b[i]);
    }
  }
}

TEST_CASE("lp_nonneg_feasible agrees with basic-solution enumeration") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 120; ++trial) {
    QMatrix a(1 + trial % 3, 1 + (trial / 3) % 4);  // <= 4 variables
    for (auto& e : a.a) e = num(rng);
    std::vector<Rat> b(a.rows);
    for (auto& e : b) e = num(rng);
    CHECK(gv::lp_nonneg_feasible(a, b).feasible == oracle::lp_by_basic_solutions(a, b));
  }
}
