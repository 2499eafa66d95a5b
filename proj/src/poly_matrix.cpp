#include "vml/poly_matrix.hpp"

#include <utility>

#include "vml/error.hpp"

namespace vml {

ConstMatrix ConstMatrix::identity(std::size_t n) {
  ConstMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(ConstMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(m(row, c), m(p, c));
    const GaussianRational inv = m(row, col).inverse();
    for (std::size_t c = 0; c < n; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col);
      for (std::size_t c = 0; c < n; ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t ConstMatrix::rank() const {
  ConstMatrix m = *this;
  return row_reduce(m).size();
}

std::vector<std::vector<GaussianRational>> ConstMatrix::kernel() const {
  ConstMatrix m = *this;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(n_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < n_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> w(n_);
    w[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = -m(r, free);
    basis.push_back(std::move(w));
  }
  return basis;
}

ConstMatrix ConstMatrix::inverse() const {
  // Gauss-Jordan on [A | I].
  ConstMatrix a = *this;
  ConstMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t p = col;
    while (p < n_ && a(p, col).is_zero()) ++p;
    if (p == n_) throw Error(ErrorCode::InvalidArgument, "matrix is singular");
    for (std::size_t c = 0; c < n_; ++c) {
      std::swap(a(col, c), a(p, c));
      std::swap(inv(col, c), inv(p, c));
    }
    const GaussianRational s = a(col, col).inverse();
    for (std::size_t c = 0; c < n_; ++c) {
      a(col, c) *= s;
      inv(col, c) *= s;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const GaussianRational f = a(r, col);
      for (std::size_t c = 0; c < n_; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Polynomial>& entries) {
  PolyMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

PolyMatrix PolyMatrix::from_constant(const ConstMatrix& c) {
  PolyMatrix m(c.size());
  for (std::size_t r = 0; r < c.size(); ++r)
    for (std::size_t k = 0; k < c.size(); ++k) m(r, k) = Polynomial(c(r, k));
  return m;
}

ConstMatrix PolyMatrix::evaluate(const GaussianRational& z) const {
  ConstMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(r, c) = (*this)(r, c)(z);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
  PolyMatrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < a.n_; ++c)
        if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

Polynomial PolyMatrix::determinant() const {
  if (n_ == 0) return 1;
  PolyMatrix m = *this;
  Polynomial prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n_ && m(p, k).is_zero()) ++p;
      if (p == n_) return {};
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_div(prev);
      m(i, k) = Polynomial();
    }
    prev = m(k, k);
  }
  Polynomial det = m(n_ - 1, n_ - 1);
  return negate ? -det : det;
}

void PolyMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < n_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void PolyMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void PolyMatrix::column_axpy(std::size_t j, const Polynomial& q, std::size_t i) {
  if (q.is_zero()) return;
  for (std::size_t r = 0; r < n_; ++r)
    if (!(*this)(r, i).is_zero()) (*this)(r, j) -= q * (*this)(r, i);
}

void PolyMatrix::row_axpy(std::size_t j, const Polynomial& q, std::size_t i) {
  if (q.is_zero()) return;
  for (std::size_t c = 0; c < n_; ++c)
    if (!(*this)(i, c).is_zero()) (*this)(j, c) -= q * (*this)(i, c);
}

PolyMatrix PolyMatrix::column_hermite_form() const {
  PolyMatrix m = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    // Euclid across columns i..n-1 of row i.
    while (true) {
      std::size_t pivot = n_;
      for (std::size_t j = i; j < n_; ++j) {
        if (m(i, j).is_zero()) continue;
        if (pivot == n_ || m(i, j).degree() < m(i, pivot).degree()) pivot = j;
      }
      if (pivot == n_) throw Error(ErrorCode::InvalidArgument, "matrix is not of full rank");
      m.swap_columns(i, pivot);
      bool clean = true;
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (m(i, j).is_zero()) continue;
        m.column_axpy(j, m(i, j).divmod(m(i, i)).first, i);
        if (!m(i, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
    const GaussianRational inv = m(i, i).leading().inverse();
    for (std::size_t r = 0; r < n_; ++r)
      if (!m(r, i).is_zero()) m(r, i) *= Polynomial(inv);
    for (std::size_t j = 0; j < i; ++j)
      m.column_axpy(j, m(i, j).divmod(m(i, i)).first, i);
  }
  return m;
}

std::vector<Polynomial> PolyMatrix::invariant_factors() const {
  PolyMatrix m = *this;
  std::vector<Polynomial> factors;
  for (std::size_t t = 0; t < n_; ++t) {
    while (true) {
      // Smallest-degree nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = n_, pc = n_;
      for (std::size_t r = t; r < n_; ++r)
        for (std::size_t c = t; c < n_; ++c)
          if (!m(r, c).is_zero() && (pr == n_ || m(r, c).degree() < m(pr, pc).degree())) {
            pr = r;
            pc = c;
          }
      if (pr == n_) {
        factors.resize(n_);  // remaining factors are zero
        return factors;
      }
      m.swap_rows(t, pr);
      m.swap_columns(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < n_; ++r) {
        if (m(r, t).is_zero()) continue;
        m.row_axpy(r, m(r, t).divmod(m(t, t)).first, t);
        if (!m(r, t).is_zero()) clean = false;
      }
      for (std::size_t c = t + 1; c < n_; ++c) {
        if (m(t, c).is_zero()) continue;
        m.column_axpy(c, m(t, c).divmod(m(t, t)).first, t);
        if (!m(t, c).is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad = n_;
      for (std::size_t r = t + 1; r < n_ && bad == n_; ++r)
        for (std::size_t c = t + 1; c < n_; ++c)
          if (!m(r, c).divisible_by(m(t, t))) {
            bad = r;
            break;
          }
      if (bad == n_) break;
      // row_t += row_bad
      m.row_axpy(t, Polynomial(-1), bad);
    }
    factors.push_back(m(t, t).monic());
  }
  return factors;
}

int PolyMatrix::max_degree() const noexcept {
  int d = -1;
  for (const auto& p : a_) d = std::max(d, p.degree());
  return d;
}

}  // namespace vml
