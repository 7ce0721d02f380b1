#pragma once

// Log canonical thresholds of Brill-Noether pairs, and the jet-dimension formula for lct.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jetscheme/loci/brill_noether.hpp"
#include "jetscheme/ring/field.hpp"

namespace jetscheme {

// min over i in [1, l-r] of (l+1-i)(g-d+l-i) / (l+1-r-i), assuming a Petri-general curve.
// Throws Error(range) when l <= r and Error(instance) on any other invalid parameter.
Rational lct_closed_form(const BNParams& p);

// A covering LP: minimize c.x over {x >= 0, a.x >= 1} in exact arithmetic.
struct CoveringLp {
  std::vector<Rational> objective;  // c, all entries >= 0
  std::vector<Rational> covering;   // a
};

struct LpSolution {
  Rational value;
  std::vector<Rational> vertex;
  std::size_t vertices_visited = 0;
};

// Enumerates every basic solution (choices of n linearly independent tight constraints among
// the n+1 available), keeps the feasible ones and returns the cheapest vertex.
// Throws Error(input) on a negative objective coefficient or an empty feasible region.
LpSolution solve_by_vertices(const CoveringLp& lp);

// The region {x >= 0, sum_i (l-r-i+1) x_i >= 1} with costs (g-d+l-i)(l-i+1), i = 1..l-r,
// solved by solve_by_vertices. Same errors as lct_closed_form.
Rational lct_lp_oracle(const BNParams& p);

struct MustataEstimate {
  Rational value;
  int horizon = 0;   // largest m supplied
  int argmax_m = 0;  // level attaining the max of dim/(m+1)
};

// ambient_dim - max_m fiber_dims[m] / (m+1), fiber_dims indexed from m = 0. The true value is
// a supremum over all m, so this is an estimate at the supplied horizon.
// Throws Error(input) on an empty list or a negative dimension.
MustataEstimate mustata_lct(int ambient_dim, const std::vector<std::int64_t>& fiber_dims);

}  // namespace jetscheme
