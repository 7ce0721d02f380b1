#pragma once

// Normal form over k[t]/(t^{m+1}), minor tests, and the base-field linearization.

#include <cstddef>
#include <numeric>
#include <vector>

#include "jetscheme/linalg/base_matrix.hpp"
#include "jetscheme/linalg/jet_matrix.hpp"
#include "jetscheme/partitions/partition.hpp"

namespace jetscheme {

template <ExactField K>
struct SnfResult {
  JetMatrix<K> U;  // rows x rows, unit
  JetMatrix<K> V;  // cols x cols, unit
  JetMatrix<K> D;  // U * A * V, diagonal with monomial entries t^{o_i}
  std::vector<int> diagonal_orders;  // o_1 <= ... <= o_{min(a,b)}; m+1 marks a zero entry
  int unit_count = 0;                // number of o_i equal to 0, the rank of A mod t
  Partition type;                    // the nonzero o_i, capped at m+1
};

// Diagonalizes A by repeatedly taking a minimal-t-order entry of the remaining block as pivot
// (first in row-major order on ties), normalizing it to t^o, and clearing its row and column.
// Every other entry of the block has order >= o, so the elimination stays inside the ring.
template <ExactField K>
SnfResult<K> smith_normal_form(const JetMatrix<K>& A) {
  using S = JetScalar<K>;
  const std::size_t a = A.rows();
  const std::size_t b = A.cols();
  const int m = A.order();
  const FieldTag tag = A.tag();

  SnfResult<K> out{JetMatrix<K>::identity(a, m, tag), JetMatrix<K>::identity(b, m, tag), A, {}, 0, {}};
  JetMatrix<K>& U = out.U;
  JetMatrix<K>& V = out.V;
  JetMatrix<K>& D = out.D;

  const std::size_t n = std::min(a, b);
  out.diagonal_orders.assign(n, m + 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    int best = m + 1;
    for (std::size_t i = k; i < a && best > 0; ++i) {
      for (std::size_t j = k; j < b; ++j) {
        const int o = D(i, j).t_order();
        if (o < best) {
          best = o;
          pr = i;
          pc = j;
          if (o == 0) break;
        }
      }
    }
    if (best == m + 1) break;  // remaining block is zero

    if (pr != k) {
      for (std::size_t j = 0; j < b; ++j) std::swap(D(pr, j), D(k, j));
      for (std::size_t j = 0; j < a; ++j) std::swap(U(pr, j), U(k, j));
    }
    if (pc != k) {
      for (std::size_t i = 0; i < a; ++i) std::swap(D(i, pc), D(i, k));
      for (std::size_t i = 0; i < b; ++i) std::swap(V(i, pc), V(i, k));
    }

    // D(k,k) = t^best * u with u a unit; scale row k by u^{-1}.
    const S u_inv = D(k, k).divide_by_t_power(best).inverse();
    if (!(u_inv == S::one(m, tag))) {
      for (std::size_t j = k; j < b; ++j) D(k, j) = u_inv * D(k, j);
      for (std::size_t j = 0; j < a; ++j) U(k, j) = u_inv * U(k, j);
    }

    for (std::size_t i = k + 1; i < a; ++i) {
      if (D(i, k).is_zero()) continue;
      const S q = D(i, k).divide_by_t_power(best);
      for (std::size_t j = k; j < b; ++j) D(i, j) -= q * D(k, j);
      for (std::size_t j = 0; j < a; ++j) U(i, j) -= q * U(k, j);
    }
    for (std::size_t j = k + 1; j < b; ++j) {
      if (D(k, j).is_zero()) continue;
      const S q = D(k, j).divide_by_t_power(best);
      // Column k is t^best * e_k after the row sweep, so only D(k, j) changes.
      D(k, j) = S::zero(m, tag);
      for (std::size_t i = 0; i < b; ++i) V(i, j) -= q * V(i, k);
    }
    out.diagonal_orders[k] = best;
  }

  std::vector<int> parts;
  for (int o : out.diagonal_orders) {
    if (o == 0) {
      ++out.unit_count;
    } else {
      parts.push_back(o);
    }
  }
  out.type = Partition(std::move(parts), m + 1);
  return out;
}

template <ExactField K>
Partition type_of(const JetMatrix<K>& A) {
  return smith_normal_form(A).type;
}

// Determinant of the s x s submatrix on the given rows and columns by cofactor expansion
// along the first row. Independent of the normal-form code path.
template <ExactField K>
JetScalar<K> minor_by_expansion(const JetMatrix<K>& A, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) {
  using S = JetScalar<K>;
  const std::size_t s = rows.size();
  if (s == 1) return A(rows[0], cols[0]);
  if (s == 2) {
    return A(rows[0], cols[0]) * A(rows[1], cols[1]) - A(rows[0], cols[1]) * A(rows[1], cols[0]);
  }
  const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  S total = S::zero(A.order(), A.tag());
  std::vector<std::size_t> sub_cols;
  sub_cols.reserve(s - 1);
  for (std::size_t c = 0; c < s; ++c) {
    const S& entry = A(rows[0], cols[c]);
    if (entry.is_zero()) continue;
    sub_cols.clear();
    for (std::size_t k = 0; k < s; ++k) {
      if (k != c) sub_cols.push_back(cols[k]);
    }
    const S term = entry * minor_by_expansion(A, sub_rows, sub_cols);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

namespace detail {

// Advances an increasing index combination of [0, n); false after the last one.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t k = i + 1; k < s; ++k) idx[k] = idx[k - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// True iff every s x s minor of A is zero in k[t]/(t^{m+1}). Direct expansion over all
// row and column subsets. Throws Error(range) unless 1 <= s <= min(a, b).
template <ExactField K>
bool minors_vanish(const JetMatrix<K>& A, std::size_t s) {
  if (s < 1 || s > std::min(A.rows(), A.cols())) {
    throw Error(ErrorKind::range, "minor size " + std::to_string(s) + " outside [1, " +
                                      std::to_string(std::min(A.rows(), A.cols())) + "]");
  }
  std::vector<std::size_t> rows(s);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  do {
    std::vector<std::size_t> cols(s);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    do {
      if (!minor_by_expansion(A, rows, cols).is_zero()) return false;
    } while (detail::next_combination(cols, A.cols()));
  } while (detail::next_combination(rows, A.rows()));
  return true;
}

// Type read off determinantal ideals: with d_k the least t-order among k x k minors, the k-th
// invariant order is d_k - d_{k-1}. Minors are taken of a polynomial lift at precision
// min(a,b)(m+1), which separates every order below the cap. Shares no code with the normal form.
template <ExactField K>
Partition type_by_minor_orders(const JetMatrix<K>& A) {
  const int m = A.order();
  const std::size_t n = std::min(A.rows(), A.cols());
  const int precision = static_cast<int>(n) * (m + 1);
  std::vector<JetScalar<K>> lifted;
  lifted.reserve(A.rows() * A.cols());
  for (const auto& entry : A.entries()) {
    lifted.push_back(JetScalar<K>::from_coefficients(entry.coefficients(), precision, A.tag()));
  }
  const auto L = JetMatrix<K>::from_entries(A.rows(), A.cols(), precision, A.tag(), std::move(lifted));

  std::vector<int> parts;
  int previous = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    int d = precision + 1;
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    do {
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      do {
        d = std::min(d, minor_by_expansion(L, rows, cols).t_order());
      } while (d > previous && detail::next_combination(cols, L.cols()));
    } while (d > previous && detail::next_combination(rows, L.rows()));
    if (d > precision || d - previous >= m + 1) {
      parts.insert(parts.end(), n - k + 1, m + 1);
      break;
    }
    if (d > previous) parts.push_back(d - previous);
    previous = d;
  }
  return Partition(std::move(parts), m + 1);
}

// The k-linear map of A on coefficient vectors, as the block upper-triangular matrix whose
// block (i, j) is A_{j-i} for j >= i. Block index i stands for the coefficient of t^{m-i}.
template <ExactField K>
BaseMatrix<K> linearize(const JetMatrix<K>& A) {
  const std::size_t a = A.rows();
  const std::size_t b = A.cols();
  const std::size_t levels = static_cast<std::size_t>(A.order()) + 1;
  BaseMatrix<K> out(levels * a, levels * b, A.tag());
  for (std::size_t bi = 0; bi < levels; ++bi) {
    for (std::size_t bj = bi; bj < levels; ++bj) {
      const int k = static_cast<int>(bj - bi);
      for (std::size_t r = 0; r < a; ++r) {
        for (std::size_t c = 0; c < b; ++c) out(bi * a + r, bj * b + c) = A(r, c)[k];
      }
    }
  }
  return out;
}

// dim_k of the kernel of A acting on (k[t]/(t^{m+1}))^cols.
template <ExactField K>
std::size_t module_kernel_dim(const JetMatrix<K>& A) {
  return kernel_dim(linearize(A));
}

extern template SnfResult<ModP> smith_normal_form(const JetMatrix<ModP>&);
extern template SnfResult<Rational> smith_normal_form(const JetMatrix<Rational>&);
extern template bool minors_vanish(const JetMatrix<ModP>&, std::size_t);
extern template bool minors_vanish(const JetMatrix<Rational>&, std::size_t);
extern template Partition type_by_minor_orders(const JetMatrix<ModP>&);
extern template Partition type_by_minor_orders(const JetMatrix<Rational>&);
extern template BaseMatrix<ModP> linearize(const JetMatrix<ModP>&);
extern template BaseMatrix<Rational> linearize(const JetMatrix<Rational>&);

}  // namespace jetscheme
