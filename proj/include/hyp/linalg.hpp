#ifndef HYP_LINALG_HPP
#define HYP_LINALG_HPP

#include <cassert>
#include <optional>
#include <vector>

#include "hyp/numbers.hpp"

namespace hyp {

template <class K>
using Vec = std::vector<K>;
template <class K>
using Mat = std::vector<std::vector<K>>;  // row-major

// Solutions of A x = b: one particular solution plus a kernel basis.
template <class K>
struct LinSolution {
  Vec<K> particular;
  std::vector<Vec<K>> kernel;
};

// Gaussian elimination over a field. Returns nullopt when inconsistent.
// A zero-dimension system (no columns) yields an empty solution.
template <class K>
std::optional<LinSolution<K>> solve_linear(Mat<K> A, Vec<K> b) {
  std::size_t rows = A.size();
  std::size_t cols = rows ? A[0].size() : 0;
  assert(b.size() == rows);
  auto kzero = [&]() -> K {
    for (const auto& row : A)
      for (const auto& x : row)
        if (!is_zero(x)) return x - x;
    for (const auto& x : b)
      if (!is_zero(x)) return x - x;
    return K{};
  };
  K zero = kzero();

  std::vector<long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && is_zero(A[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[rank]);
    std::swap(b[piv], b[rank]);
    K li = kinv(A[rank][col]);
    for (std::size_t j = col; j < cols; ++j) A[rank][j] = li * A[rank][j];
    b[rank] = li * b[rank];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || is_zero(A[i][col])) continue;
      K f = A[i][col];
      for (std::size_t j = col; j < cols; ++j) A[i][j] = A[i][j] - f * A[rank][j];
      b[i] = b[i] - f * b[rank];
    }
    pivot_of_col[col] = (long)rank;
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (!is_zero(b[i])) return std::nullopt;

  LinSolution<K> sol;
  sol.particular.assign(cols, zero);
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0) sol.particular[col] = b[pivot_of_col[col]];

  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    Vec<K> v(cols, zero);
    v[free_col] = kfrom_int(zero, 1);
    for (std::size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -A[pivot_of_col[col]][free_col];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

// Kernel basis of A (right null space).
template <class K>
std::vector<Vec<K>> nullspace(const Mat<K>& A) {
  if (A.empty()) return {};
  K zero = A[0][0] - A[0][0];
  for (const auto& row : A)
    for (const auto& x : row)
      if (!is_zero(x)) zero = x - x;
  Vec<K> b(A.size(), zero);
  auto sol = solve_linear(A, b);
  assert(sol);
  return sol->kernel;
}

}  // namespace hyp

#endif
