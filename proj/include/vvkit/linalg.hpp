#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vvkit/rational.hpp"

namespace vvkit {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);

/// Unique solution of A x = b, or nullopt when A is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::span<const Rational> b);

std::optional<RationalMatrix> inverse(const RationalMatrix& a);

/// Basis of {v : v^T A = 0}, returned in reduced echelon form.
std::vector<std::vector<Rational>> left_kernel(const RationalMatrix& a);

/// Incrementally maintained echelon basis of a subspace of Q^n.
///
/// Rows are kept fully reduced with pivot entry 1, so membership is a single
/// sweep over the pivots.
class EchelonSpace {
 public:
  explicit EchelonSpace(std::size_t dimension) : n_(dimension) {}

  std::size_t dimension() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis in place; returns true when v ends up zero.
  bool reduce(std::vector<Rational>& v) const;
  /// Adds v; returns false (and leaves the space unchanged) if v is already
  /// in the span.
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const { return reduce(v); }

 private:
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace vvkit
