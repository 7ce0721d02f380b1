#include "jetscheme/loci/lct.hpp"

#include <optional>
#include <string>

namespace jetscheme {

namespace {

void check_lct_params(const BNParams& p) {
  if (p.l <= p.r) {
    throw Error(ErrorKind::range, "index range [1, l-r] is empty for l = " + std::to_string(p.l) +
                                      ", r = " + std::to_string(p.r));
  }
  p.validate();
}

Rational from_int(std::int64_t n) { return Rational::from_int(n, FieldTag::rationals()); }

// Solves the square system M x = rhs exactly; nullopt when M is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && M[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(M[pivot], M[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = M[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) M[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || M[i][col].is_zero()) continue;
      const Rational f = M[i][col];
      for (std::size_t j = col; j < n; ++j) M[i][j] -= f * M[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

Rational lct_closed_form(const BNParams& p) {
  check_lct_params(p);
  std::optional<Rational> best;
  for (int i = 1; i <= p.l - p.r; ++i) {
    const Rational term(static_cast<std::int64_t>(p.l + 1 - i) * (p.g - p.d + p.l - i), p.l + 1 - p.r - i);
    if (!best || term < *best) best = term;
  }
  return *best;
}

LpSolution solve_by_vertices(const CoveringLp& lp) {
  const std::size_t n = lp.objective.size();
  if (n == 0 || lp.covering.size() != n) throw Error(ErrorKind::input, "LP needs matching non-empty vectors");
  for (const auto& c : lp.objective) {
    if (c.is_negative()) throw Error(ErrorKind::input, "objective must be non-negative for a bounded minimum");
  }

  // Constraint k < n is x_k >= 0; constraint n is a.x >= 1. A basis leaves out exactly one.
  LpSolution out;
  bool found = false;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> rhs;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == skip) continue;
      if (k < n) {
        std::vector<Rational> row(n, from_int(0));
        row[k] = from_int(1);
        M.push_back(std::move(row));
        rhs.push_back(from_int(0));
      } else {
        M.push_back(lp.covering);
        rhs.push_back(from_int(1));
      }
    }
    auto x = solve_square(std::move(M), std::move(rhs));
    if (!x) continue;
    ++out.vertices_visited;

    Rational cover = from_int(0);
    Rational cost = from_int(0);
    bool feasible = true;
    for (std::size_t k = 0; k < n; ++k) {
      if ((*x)[k].is_negative()) feasible = false;
      cover += lp.covering[k] * (*x)[k];
      cost += lp.objective[k] * (*x)[k];
    }
    if (!feasible || cover < from_int(1)) continue;
    if (!found || cost < out.value) {
      out.value = cost;
      out.vertex = std::move(*x);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::input, "LP region has no vertex");
  return out;
}

Rational lct_lp_oracle(const BNParams& p) {
  check_lct_params(p);
  CoveringLp lp;
  for (int i = 1; i <= p.l - p.r; ++i) {
    lp.objective.push_back(from_int(static_cast<std::int64_t>(p.g - p.d + p.l - i) * (p.l - i + 1)));
    lp.covering.push_back(from_int(p.l - i - p.r + 1));
  }
  return solve_by_vertices(lp).value;
}

MustataEstimate mustata_lct(int ambient_dim, const std::vector<std::int64_t>& fiber_dims) {
  if (fiber_dims.empty()) throw Error(ErrorKind::input, "no jet-fiber dimensions supplied");
  MustataEstimate out;
  std::optional<Rational> best;
  for (std::size_t m = 0; m < fiber_dims.size(); ++m) {
    if (fiber_dims[m] < 0) throw Error(ErrorKind::input, "jet-fiber dimensions must be non-negative");
    const Rational ratio(fiber_dims[m], static_cast<std::int64_t>(m) + 1);
    if (!best || *best < ratio) {
      best = ratio;
      out.argmax_m = static_cast<int>(m);
    }
  }
  out.value = from_int(ambient_dim) - *best;
  out.horizon = static_cast<int>(fiber_dims.size()) - 1;
  return out;
}

}  // namespace jetscheme
