#include "vvkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace vvkit {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) a_.push_back(x);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto piv = row_reduce(aug);
  if (piv.size() < n || piv.back() >= n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] >= n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

std::vector<std::vector<Rational>> left_kernel(const RationalMatrix& a) {
  // Row reduce the transpose; its null space is the left kernel of a.
  RationalMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  const auto piv = row_reduce(t);
  std::vector<bool> is_pivot(a.rows(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.rows(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.rows());
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t(r, free);
    basis.push_back(std::move(v));
  }
  // Bring the basis into reduced echelon form so the result is canonical.
  if (basis.empty()) return basis;
  RationalMatrix k(basis.size(), a.rows());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) k(i, j) = basis[i][j];
  }
  const auto kp = row_reduce(k);
  basis.assign(kp.size(), {});
  for (std::size_t i = 0; i < kp.size(); ++i) basis[i].assign(k.row(i).begin(), k.row(i).end());
  return basis;
}

bool EchelonSpace::reduce(std::vector<Rational>& v) const {
  if (v.size() != n_) throw std::invalid_argument("EchelonSpace: dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    const auto& row = rows_[r];
    for (std::size_t j = p; j < n_; ++j) {
      if (row[j] != 0) v[j] -= f * row[j];
    }
  }
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool EchelonSpace::insert(std::vector<Rational> v) {
  if (reduce(v)) return false;
  std::size_t p = 0;
  while (v[p] == 0) ++p;
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < n_; ++j) v[j] *= inv;
  // Keep earlier rows reduced with respect to the new pivot.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t j = p; j < n_; ++j) {
      if (v[j] != 0) row[j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace vvkit
