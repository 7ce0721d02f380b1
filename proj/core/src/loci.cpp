#include "jetscheme/loci/brill_noether.hpp"

#include <algorithm>
#include <limits>

namespace jetscheme {

void BNParams::validate() const {
  const auto fail = [this](const std::string& why) {
    throw Error(ErrorKind::instance, "invalid (g,d,r,l) = (" + std::to_string(g) + "," + std::to_string(d) +
                                         "," + std::to_string(r) + "," + std::to_string(l) + "): " + why);
  };
  if (g < 2) fail("g must be at least 2");
  if (d < 1 || d > g - 1) fail("d must lie in [1, g-1]");
  if (l < 1) fail("l must be at least 1");
  if (r < 0 || r > l - 1) fail("r must lie in [0, l-1]");
}

DeterminantalModel DeterminantalModel::make(int g, int d, int r, std::optional<int> e) {
  DeterminantalModel model;
  model.g = g;
  model.d = d;
  model.r = r;
  model.e = e.value_or(2 * g - d - 1);
  const auto fail = [](const std::string& why) { throw Error(ErrorKind::model, why); };
  if (g < 0 || r < 0) fail("g and r must be non-negative");
  if (model.e < 2 * g - d - 1) fail("auxiliary degree e must be at least 2g-d-1");
  const int a = d + model.e + 1 - g;
  const int s = a - r;
  if (a < 1) fail("model has no rows (d+e+1-g < 1)");
  if (model.e < 1) fail("model has no columns (e < 1)");
  if (s < 1 || s > std::min(a, model.e)) fail("minor size e+d+1-g-r outside [1, min(a,b)]");
  model.a = static_cast<std::size_t>(a);
  model.b = static_cast<std::size_t>(model.e);
  model.s = static_cast<std::size_t>(s);
  return model;
}

int multiplicity_from_jets(const std::function<bool(int)>& fiber_is_full, int horizon) {
  for (int m = 1; m <= horizon; ++m) {
    if (!fiber_is_full(m)) return m;
  }
  throw Error(ErrorKind::horizon, "jet fiber is full at every level up to horizon " + std::to_string(horizon));
}

std::int64_t stratum_dim_bound_theta(const Partition& lambda, int g, int m) {
  if (lambda.cap() != m + 1) throw Error(ErrorKind::instance, "partition cap must equal m+1");
  if (lambda.is_empty()) throw Error(ErrorKind::instance, "theta stratum bound needs l >= 1");
  const std::int64_t l = lambda.length();
  return static_cast<std::int64_t>(m) * g - (lambda.sum() - r_of(lambda, lambda.largest())) + l - 1;
}

std::int64_t wrd_stratum_dim_bound(const BoundsQuery& query, const Partition& lambda) {
  const int g = query.params.g;
  const int d = query.params.d;
  const int m = query.m;
  if (lambda.cap() != m + 1) throw Error(ErrorKind::instance, "partition cap must equal m+1");
  const int i = std::max(lambda.largest() - 1, 0);

  const Signature kappa = query.kappa.value_or(signature_of(lambda));
  if (query.kappa) {
    for (int j = 1; j <= i; ++j) {
      if (kappa.at(j) > n_of(lambda, j + 1)) {
        throw Error(ErrorKind::input, "signature entry kappa_" + std::to_string(j) + " exceeds n_" +
                                          std::to_string(j + 1) + "(lambda)");
      }
    }
  }
  if (query.defects) {
    if (static_cast<int>(query.defects->size()) < i) {
      throw Error(ErrorKind::input, "defect list shorter than lambda_l - 1 = " + std::to_string(i));
    }
    for (int dj : *query.defects) {
      if (dj < 0) throw Error(ErrorKind::input, "defects must be non-negative");
    }
  }

  std::int64_t bound = static_cast<std::int64_t>(g) * i;
  for (int j = 1; j <= i; ++j) {
    const std::int64_t dj = query.defects ? (*query.defects)[static_cast<std::size_t>(j - 1)] : 0;
    bound -= static_cast<std::int64_t>(kappa.at(j)) * (g - d - 1 + n_of(lambda, j)) - dj;
  }
  return bound + static_cast<std::int64_t>(g) * (m - i);
}

ThetaSingBound theta_sing_fiber_bound(int g, int m) {
  if (g < 3) throw Error(ErrorKind::range, "theta singular-fiber bound needs g >= 3");
  if (m < 1) throw Error(ErrorKind::range, "theta singular-fiber bound needs m >= 1");
  const std::int64_t ceiling = static_cast<std::int64_t>(m + 1) * (g - 1);

  ThetaSingBound out;
  out.bound = std::numeric_limits<std::int64_t>::min();
  for (int l = 2; l <= g - 1; ++l) {
    PartitionStream stream(l, m + 1, [m](const Partition& p) { return p.sum() >= m + 1; });
    while (auto lambda = stream.next()) {
      const std::int64_t value =
          ceiling - (lambda->sum() - m - 1) - (l - r_of(*lambda, lambda->largest()));
      if (value > out.bound) {
        out.bound = value;
        out.argmax_l = l;
        out.argmax_lambda = *lambda;
      }
      if (value == ceiling) break;  // both penalties vanish; nothing larger exists
    }
    if (out.bound == ceiling) break;
  }
  for (int l = 2; l <= g - 1; ++l) {
    if ((m + 1) % l == 0) out.tight_possible = true;
  }
  return out;
}

int martens_bound(int g, int d, int r, bool hyperelliptic) {
  if (d < 2 || d > g - 1) throw Error(ErrorKind::range, "Martens bound needs 2 <= d <= g-1");
  if (r <= 0 || 2 * r > d) throw Error(ErrorKind::range, "Martens bound needs 0 < 2r <= d");
  return hyperelliptic ? d - 2 * r : d - 2 * r - 1;
}

std::int64_t theta_sing_first_level_dim(int g, bool hyperelliptic) {
  return martens_bound(g, g - 1, 1, hyperelliptic) + static_cast<std::int64_t>(g);
}

std::vector<std::int64_t> theta_sing_dims(int g, int horizon, bool hyperelliptic) {
  if (horizon < 1) throw Error(ErrorKind::range, "horizon must be at least 1");
  std::vector<std::int64_t> dims;
  dims.reserve(static_cast<std::size_t>(horizon));
  const std::int64_t first = theta_sing_first_level_dim(g, hyperelliptic);
  for (int m = 1; m <= horizon; ++m) dims.push_back(first + static_cast<std::int64_t>(m - 1) * (g - 1));
  return dims;
}

std::string_view to_string(SingularityTag tag) noexcept {
  switch (tag) {
    case SingularityTag::terminal_evidence: return "terminal-evidence";
    case SingularityTag::canonical_evidence: return "canonical-evidence";
    case SingularityTag::rational_evidence: return "rational-evidence";
    case SingularityTag::violated: return "violated";
    case SingularityTag::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SingularityTag classify_singularities(int n, const std::vector<std::int64_t>& dims, bool divisor) {
  if (n < 1) throw Error(ErrorKind::input, "dimension must be positive");
  const std::int64_t variety_dim = divisor ? n - 1 : n;
  for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
    if (dims[k + 1] < dims[k] + variety_dim) {
      throw Error(ErrorKind::inconsistent_input,
                  "jet fiber dimension at level " + std::to_string(k + 2) + " grows by less than dim X = " +
                      std::to_string(variety_dim));
    }
  }
  if (dims.empty()) return SingularityTag::inconclusive;

  bool terminal = true;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::int64_t levels = static_cast<std::int64_t>(k) + 2;  // m + 1
    if (dims[k] >= levels * variety_dim) return SingularityTag::violated;
    if (dims[k] > levels * variety_dim - 2) terminal = false;
  }
  if (!divisor) return SingularityTag::rational_evidence;
  return terminal ? SingularityTag::terminal_evidence : SingularityTag::canonical_evidence;
}

}  // namespace jetscheme
