#include "vml/integer_snf.hpp"

#include <utility>

namespace vml {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of least absolute value in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m(r, c) != 0 && (pr == rows || abs(m(r, c)) < abs(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    if (pr != t)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(pr, c));
    if (pc != t)
      for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, pc));

    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (m(r, t) == 0) continue;
      const BigInt q = floor_div(m(r, t), m(t, t));
      for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
      if (m(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (m(t, c) == 0) continue;
      const BigInt q = floor_div(m(t, c), m(t, t));
      for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
      if (m(t, c) != 0) clean = false;
    }
    if (!clean) continue;

    // Divisibility of the trailing block by the pivot.
    std::size_t bad_row = rows;
    for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
      for (std::size_t c = t + 1; c < cols; ++c)
        if (m(r, c) % m(t, t) != 0) {
          bad_row = r;
          break;
        }
    if (bad_row != rows) {
      for (std::size_t c = t; c < cols; ++c) m(t, c) += m(bad_row, c);
      continue;
    }
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  return diag;
}

}  // namespace vml
