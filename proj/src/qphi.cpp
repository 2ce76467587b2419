#include "ncfact/qphi.hpp"

#include <utility>

#include "ncfact/errors.hpp"

namespace ncfact {

QPhi QPhi::inverse() const {
  const Rational n = norm();
  if (n == 0) throw std::domain_error("QPhi: division by zero");
  const QPhi c = conjugate();
  return {c.a_ / n, c.b_ / n};
}

std::string QPhi::str() const {
  if (b_ == 0) return to_fraction_string(a_);
  std::string out;
  if (a_ != 0) out = to_fraction_string(a_) + "+";
  return out + to_fraction_string(b_) + "*phi";
}

int matrix_rank(QPhiMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    const QPhi inv = m[row][col].inverse();
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      const QPhi factor = m[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace ncfact
