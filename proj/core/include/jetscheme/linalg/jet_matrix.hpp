#pragma once

// Matrices over k[t]/(t^{m+1}). Matrices act on column vectors: the domain has dimension cols().

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jetscheme/error.hpp"
#include "jetscheme/linalg/base_matrix.hpp"
#include "jetscheme/ring/jet_scalar.hpp"

namespace jetscheme {

template <ExactField K>
class JetMatrix {
 public:
  using scalar_type = JetScalar<K>;

  JetMatrix() = default;

  static JetMatrix zero(std::size_t rows, std::size_t cols, int order, FieldTag tag) {
    check_shape(rows, cols);
    return JetMatrix(rows, cols, order, tag,
                     std::vector<scalar_type>(rows * cols, scalar_type::zero(order, tag)));
  }
  static JetMatrix identity(std::size_t n, int order, FieldTag tag) {
    JetMatrix m = zero(n, n, order, tag);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_type::one(order, tag);
    return m;
  }
  // rows x cols matrix with t^{orders[i]} on the diagonal (orders beyond m give 0).
  static JetMatrix diagonal_monomials(std::size_t rows, std::size_t cols,
                                      const std::vector<int>& orders, int order, FieldTag tag) {
    JetMatrix m = zero(rows, cols, order, tag);
    if (orders.size() > std::min(rows, cols)) throw Error(ErrorKind::range, "too many diagonal entries");
    for (std::size_t i = 0; i < orders.size(); ++i) {
      m(i, i) = scalar_type::monomial(orders[i], order, tag);
    }
    return m;
  }
  // Row-major entries. Throws Error(incompatible_operands) on order or field mismatch.
  static JetMatrix from_entries(std::size_t rows, std::size_t cols, int order, FieldTag tag,
                                std::vector<scalar_type> entries) {
    check_shape(rows, cols);
    if (entries.size() != rows * cols) throw Error(ErrorKind::range, "entry count does not match shape");
    for (const auto& e : entries) {
      if (e.order() != order || e.tag() != tag) {
        throw Error(ErrorKind::incompatible_operands, "matrix entry over a different ring");
      }
    }
    return JetMatrix(rows, cols, order, tag, std::move(entries));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int order() const noexcept { return order_; }
  FieldTag tag() const noexcept { return tag_; }
  const std::vector<scalar_type>& entries() const noexcept { return entries_; }

  scalar_type& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const scalar_type& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  JetMatrix operator*(const JetMatrix& rhs) const {
    if (cols_ != rhs.rows_ || order_ != rhs.order_ || tag_ != rhs.tag_) {
      throw Error(ErrorKind::incompatible_operands, "matrix product of incompatible operands");
    }
    JetMatrix out = zero(rows_, rhs.cols_, order_, tag_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const scalar_type& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }

  JetMatrix transpose() const {
    JetMatrix out = zero(cols_, rows_, order_, tag_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  // Entrywise image in k[t]/(t^{j+1}).
  JetMatrix truncate(int j) const {
    std::vector<scalar_type> entries;
    entries.reserve(entries_.size());
    for (const auto& e : entries_) entries.push_back(e.truncate(j));
    return JetMatrix(rows_, cols_, j, tag_, std::move(entries));
  }

  // A_k in A = A_0 + A_1 t + ... + A_m t^m.
  BaseMatrix<K> coefficient_matrix(int k) const {
    BaseMatrix<K> out(rows_, cols_, tag_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j)[k];
    }
    return out;
  }

  // Square and invertible in the matrix ring, i.e. A_0 is invertible over k.
  bool is_unit() const {
    if (rows_ != cols_) return false;
    return !determinant(coefficient_matrix(0)).is_zero();
  }

  friend bool operator==(const JetMatrix&, const JetMatrix&) = default;

 private:
  JetMatrix(std::size_t rows, std::size_t cols, int order, FieldTag tag, std::vector<scalar_type> entries)
      : rows_(rows), cols_(cols), order_(order), tag_(tag), entries_(std::move(entries)) {}

  static void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw Error(ErrorKind::range, "matrix dimensions must be positive");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int order_ = 0;
  FieldTag tag_{};
  std::vector<scalar_type> entries_;
};

}  // namespace jetscheme
