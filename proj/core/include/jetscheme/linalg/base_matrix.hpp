#pragma once

// Dense matrices over the base field with exact Gaussian elimination.

#include <cstddef>
#include <utility>
#include <vector>

#include "jetscheme/error.hpp"
#include "jetscheme/ring/field.hpp"

namespace jetscheme {

template <ExactField K>
class BaseMatrix {
 public:
  BaseMatrix() = default;
  BaseMatrix(std::size_t rows, std::size_t cols, FieldTag tag)
      : rows_(rows), cols_(cols), tag_(tag), entries_(rows * cols, K::zero(tag)) {}

  static BaseMatrix identity(std::size_t n, FieldTag tag) {
    BaseMatrix m(n, n, tag);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K::one(tag);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldTag tag() const noexcept { return tag_; }

  K& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const BaseMatrix&, const BaseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldTag tag_{};
  std::vector<K> entries_;
};

// Rank by row reduction on a copy.
template <ExactField K>
std::size_t rank(BaseMatrix<K> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    }
    const K inv = m(rank, col).inverse();
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const K factor = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

// Nullity of the map on column vectors: cols - rank.
template <ExactField K>
std::size_t kernel_dim(const BaseMatrix<K>& m) {
  return m.cols() - rank(m);
}

template <ExactField K>
K determinant(BaseMatrix<K> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::range, "determinant of a non-square matrix");
  K det = K::one(m.tag());
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return K::zero(m.tag());
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const K inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const K factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

}  // namespace jetscheme
