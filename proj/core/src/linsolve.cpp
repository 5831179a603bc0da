#include "a2/linsolve.hpp"

namespace a2 {

namespace {

// Reduces m in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Cyclotomic inv = m[row][col].inv();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Cyclotomic f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return reduce(m, m.front().size()).size();
}

std::optional<std::vector<Cyclotomic>> solve(const Matrix& A, const std::vector<Cyclotomic>& b) {
  if (A.size() != b.size()) throw Error("solve: row count mismatch");
  std::size_t cols = A.empty() ? 0 : A.front().size();
  Matrix aug = A;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    if (aug[r].size() != cols) throw Error("solve: ragged matrix");
    aug[r].push_back(b[r]);
  }
  auto pivots = reduce(aug, cols);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (!aug[r][cols].is_zero()) return std::nullopt;
  std::vector<Cyclotomic> x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

}  // namespace a2
