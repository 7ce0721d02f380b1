#pragma once

// Jet-level calculators for Brill-Noether loci in their local determinantal model.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetscheme/linalg/smith.hpp"
#include "jetscheme/partitions/partition.hpp"

namespace jetscheme {

// A degree-d line bundle with l = h^0(L) on a genus-g curve, queried against W^r_d.
struct BNParams {
  int g = 0;
  int d = 0;
  int r = 0;
  int l = 0;

  // Throws Error(instance) unless g >= 2, 1 <= d <= g-1, l >= 1 and 0 <= r <= l-1.
  void validate() const;
};

// Local matrix model: W^r_d is cut out by the s x s minors of an a x b matrix with
// a = d+e+1-g, b = e and s = a - r, for an auxiliary divisor of degree e >= 2g-d-1.
struct DeterminantalModel {
  int g = 0;
  int d = 0;
  int r = 0;
  int e = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t s = 0;

  // e defaults to the minimal legal degree 2g-d-1. Throws Error(model) on an illegal model.
  static DeterminantalModel make(int g, int d, int r, std::optional<int> e = std::nullopt);
};

struct WrdMembership {
  bool member = false;  // partition criterion on the normal-form type
  bool oracle = false;  // direct vanishing of all s x s minors
  Partition type;
};

// Decides whether the jet matrix A lies in the jet scheme of W^r_d, via its type, and checks
// the answer against minor expansion. A may be given in either orientation.
// Throws Error(model) on a shape mismatch and std::logic_error if the two routes disagree.
template <ExactField K>
WrdMembership wrd_member(const JetMatrix<K>& A, const DeterminantalModel& model) {
  const bool straight = A.rows() == model.a && A.cols() == model.b;
  const bool transposed = A.rows() == model.b && A.cols() == model.a;
  if (!straight && !transposed) {
    throw Error(ErrorKind::model, "matrix is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                                      " but the model is " + std::to_string(model.a) + "x" +
                                      std::to_string(model.b));
  }
  WrdMembership out;
  out.type = type_of(A);
  const int m = A.order();
  // With r > l some s x s minor is a unit.
  out.member = model.r <= out.type.length() && wrd_jet_criterion(out.type, m, model.r);
  out.oracle = minors_vanish(A, model.s);
  if (out.member != out.oracle) {
    throw std::logic_error("partition criterion and minor expansion disagree for type " +
                           out.type.to_literal());
  }
  return out;
}

// Least m in [1, horizon] at which the jet fiber over the point is a proper subset of the
// ambient jet fiber. `fiber_is_full(m)` must be monotone. Throws Error(horizon) if none.
int multiplicity_from_jets(const std::function<bool(int)>& fiber_is_full, int horizon);

// Dimension bound for the theta stratum of type lambda at level m on a genus-g curve:
// mg - (sum lambda_i - r_{lambda_l}(lambda)) + l - 1. Requires cap = m+1 and l >= 1.
std::int64_t stratum_dim_bound_theta(const Partition& lambda, int g, int m);

struct BoundsQuery {
  BNParams params;
  int m = 0;
  std::optional<std::vector<int>> defects;  // d_1..d_i; all zero when absent
  std::optional<Signature> kappa;           // defaults to signature_of(lambda)
};

// Flag-stratum bound assembled at level i = lambda_l - 1 and lifted to level m:
// g*i - sum_{j=1}^{i} (kappa_j (g-d-1+n_j(lambda)) - d_j) + g*(m-i).
std::int64_t wrd_stratum_dim_bound(const BoundsQuery& query, const Partition& lambda);

struct ThetaSingBound {
  std::int64_t bound = 0;
  bool tight_possible = false;  // some l in [2, g-1] divides m+1
  int argmax_l = 0;
  Partition argmax_lambda;
};

// max over l in [2, g-1] and lambda in Lambda_{l,m+1} with sum >= m+1 of
// (m+1)(g-1) - (sum lambda_i - m - 1) - (l - r_{lambda_l}(lambda)). Throws Error(range) for g < 3 or m < 1.
ThetaSingBound theta_sing_fiber_bound(int g, int m);

// d - 2r on hyperelliptic curves, d - 2r - 1 otherwise.
// Throws Error(range) unless 2 <= d <= g-1 and 0 < 2r <= d.
int martens_bound(int g, int d, int r, bool hyperelliptic);

// dim of the level-1 jets over the singular locus of theta: dim W^1_{g-1} + g with the
// dimension of W^1_{g-1} taken at its Martens value (g-3 hyperelliptic, g-4 otherwise).
std::int64_t theta_sing_first_level_dim(int g, bool hyperelliptic);

// The sequence dims[m-1] = first-level value + (m-1)(g-1) for m = 1..horizon, obtained by
// propagating the first level with the per-level growth g-1 of a (g-1)-dimensional lci.
std::vector<std::int64_t> theta_sing_dims(int g, int horizon, bool hyperelliptic);

enum class SingularityTag { terminal_evidence, canonical_evidence, rational_evidence, violated, inconclusive };

std::string_view to_string(SingularityTag tag) noexcept;

// Reads jet-fiber dimensions over the singular locus, dims[k] at level m = k+1.
// For a divisor (default) n is the ambient dimension and the divisor has dimension n-1:
//   violated     if some dim >= (m+1)(n-1)
//   terminal     if every dim <= (m+1)(n-1) - 2
//   canonical    otherwise (rational and canonical coincide for lci varieties).
// For a non-divisor lci of dimension n only the rationality inequality dim < n(m+1) is tested.
// Throws Error(inconsistent_input) if some dims[k+1] < dims[k] + dim X.
SingularityTag classify_singularities(int n, const std::vector<std::int64_t>& sing_fiber_dims,
                                      bool divisor = true);

}  // namespace jetscheme
