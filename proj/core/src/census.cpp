#include "jetscheme/census/census.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "jetscheme/linalg/smith.hpp"

namespace jetscheme {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: sample `index` of seed `seed` is reproducible on its own, so shards need
// no coordination.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index)
      : state_(mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL))) {}

  std::uint32_t below(std::uint32_t p) {
    const std::uint64_t limit = kSaturated - kSaturated % p;
    for (;;) {
      const std::uint64_t x = next();
      if (x < limit) return static_cast<std::uint32_t>(x % p);
    }
  }

 private:
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  std::uint64_t state_;
};

std::vector<JetScalar<ModP>> entries_from_digits(const std::vector<std::uint32_t>& digits, std::size_t count,
                                                 int m, FieldTag tag) {
  std::vector<JetScalar<ModP>> entries;
  entries.reserve(count);
  std::vector<ModP> coeffs(static_cast<std::size_t>(m) + 1, ModP::zero(tag));
  for (std::size_t e = 0; e < count; ++e) {
    for (int c = 0; c <= m; ++c) {
      coeffs[static_cast<std::size_t>(c)] =
          ModP::from_int(digits[e * (static_cast<std::size_t>(m) + 1) + static_cast<std::size_t>(c)], tag);
    }
    entries.push_back(JetScalar<ModP>::from_coefficients(coeffs, m, tag));
  }
  return entries;
}

bool snf_is_sound(const JetMatrix<ModP>& A, const SnfResult<ModP>& snf) {
  const int m = A.order();
  if (!snf.U.is_unit() || !snf.V.is_unit()) return false;
  if (!(snf.U * A * snf.V == snf.D)) return false;
  if (!std::is_sorted(snf.diagonal_orders.begin(), snf.diagonal_orders.end())) return false;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const auto expected = i == j ? JetScalar<ModP>::monomial(snf.diagonal_orders[i], m, A.tag())
                                   : JetScalar<ModP>::zero(m, A.tag());
      if (!(snf.D(i, j) == expected)) return false;
    }
  }
  return true;
}

std::string mode_name(CensusMode mode) { return mode == CensusMode::exhaustive ? "exhaustive" : "random"; }

}  // namespace

void CensusSpec::validate() const {
  validate_field_and_shape();
  if (mode == CensusMode::exhaustive) {
    if (space_size() > budget) {
      throw Error(ErrorKind::budget, "exhaustive census of p^{(m+1)ab} matrices exceeds the budget of " +
                                         std::to_string(budget));
    }
  } else {
    if (count > budget) {
      throw Error(ErrorKind::budget, "sample count " + std::to_string(count) + " exceeds the budget of " +
                                         std::to_string(budget));
    }
    if (count > space_size()) {
      throw Error(ErrorKind::sampling, "sample count " + std::to_string(count) +
                                           " exceeds the number of distinct matrices");
    }
  }
}

void CensusSpec::validate_field_and_shape() const {
  if (!is_prime(p) || p >= (std::uint32_t{1} << 31)) {
    throw Error(ErrorKind::input, "census prime p = " + std::to_string(p) + " is not a prime below 2^31");
  }
  if (a == 0 || b == 0 || a > 16 || b > 16) throw Error(ErrorKind::input, "census shape must lie in [1,16] x [1,16]");
  if (m < 0 || m > 64) throw Error(ErrorKind::input, "census order m must lie in [0, 64]");
  for (std::size_t s : minor_sizes) {
    if (s < 1 || s > std::min(a, b)) {
      throw Error(ErrorKind::input, "minor size " + std::to_string(s) + " outside [1, min(a,b)]");
    }
  }
}

std::uint64_t CensusSpec::space_size() const {
  return saturating_pow(p, (static_cast<std::uint64_t>(m) + 1) * a * b);
}

std::uint64_t CensusSpec::visit_count() const { return mode == CensusMode::exhaustive ? space_size() : count; }

std::vector<std::size_t> CensusSpec::effective_minor_sizes() const {
  if (!minor_sizes.empty()) {
    std::set<std::size_t> unique(minor_sizes.begin(), minor_sizes.end());
    return {unique.begin(), unique.end()};
  }
  std::vector<std::size_t> all(std::min(a, b));
  for (std::size_t s = 0; s < all.size(); ++s) all[s] = s + 1;
  return all;
}

CensusReport& CensusReport::merge(const CensusReport& other) {
  if (!(spec == other.spec)) throw Error(ErrorKind::input, "cannot merge census reports of different specs");
  total += other.total;
  for (const auto& [type, n] : other.type_counts) type_counts[type] += n;
  for (const auto& [s, n] : other.locus_counts) locus_counts[s] += n;
  discrepancies += other.discrepancies;
  kernel_checked += other.kernel_checked;
  kernel_violations += other.kernel_violations;
  snf_failures += other.snf_failures;
  truncation_violations += other.truncation_violations;
  return *this;
}

JetMatrix<ModP> census_matrix(const CensusSpec& spec, std::uint64_t index) {
  const FieldTag tag = FieldTag::prime(spec.p);
  const std::size_t cells = spec.a * spec.b;
  std::vector<std::uint32_t> digits(cells * (static_cast<std::size_t>(spec.m) + 1));
  if (spec.mode == CensusMode::exhaustive) {
    for (auto& d : digits) {
      d = static_cast<std::uint32_t>(index % spec.p);
      index /= spec.p;
    }
  } else {
    SampleStream rng(spec.seed, index);
    for (auto& d : digits) d = rng.below(spec.p);
  }
  return JetMatrix<ModP>::from_entries(spec.a, spec.b, spec.m, tag, entries_from_digits(digits, cells, spec.m, tag));
}

void census_visit(const JetMatrix<ModP>& A, CensusReport& report) {
  const int m = A.order();
  const auto snf = smith_normal_form(A);
  if (report.spec.verify_snf && !snf_is_sound(A, snf)) ++report.snf_failures;
  ++report.type_counts[snf.type];
  ++report.total;

  std::vector<int> orders = snf.diagonal_orders;
  std::sort(orders.begin(), orders.end());
  for (std::size_t s : report.spec.effective_minor_sizes()) {
    const bool oracle = minors_vanish(A, s);
    int smallest = 0;
    for (std::size_t k = 0; k < s; ++k) smallest += orders[k];
    if (oracle != (smallest >= m + 1)) ++report.discrepancies;
    if (oracle) ++report.locus_counts[s];
  }

  if (A.cols() <= A.rows()) {
    ++report.kernel_checked;
    if (module_kernel_dim(A) != static_cast<std::size_t>(h0_from_type(snf.type, m))) ++report.kernel_violations;
  }

  if (report.spec.verify_truncation) {
    for (int i = 0; i < m; ++i) {
      if (!(type_of(A.truncate(i)) == truncate_partition(snf.type, i + 1))) ++report.truncation_violations;
    }
  }
}

CensusReport run_census_range(const CensusSpec& spec, std::uint64_t begin, std::uint64_t end) {
  spec.validate();
  if (begin > end || end > spec.visit_count()) throw Error(ErrorKind::input, "census range out of bounds");
  CensusReport report;
  report.spec = spec;
  for (std::uint64_t i = begin; i < end; ++i) census_visit(census_matrix(spec, i), report);
  return report;
}

CensusReport run_census(const CensusSpec& spec, unsigned shards) {
  spec.validate();
  const std::uint64_t n = spec.visit_count();
  const std::uint64_t k = std::max<std::uint64_t>(1, std::min<std::uint64_t>(shards, std::max<std::uint64_t>(n, 1)));
  if (k == 1) return run_census_range(spec, 0, n);

  std::vector<CensusReport> parts(k);
  std::vector<std::exception_ptr> failures(k);
  {
    std::vector<std::jthread> workers;
    workers.reserve(k);
    for (std::uint64_t w = 0; w < k; ++w) {
      workers.emplace_back([&, w] {
        try {
          parts[w] = run_census_range(spec, n * w / k, n * (w + 1) / k);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  CensusReport merged = std::move(parts[0]);
  for (std::uint64_t w = 1; w < k; ++w) merged.merge(parts[w]);
  return merged;
}

nlohmann::json report_to_json(const CensusReport& report) {
  const CensusSpec& s = report.spec;
  nlohmann::json spec = {{"p", s.p},
                         {"rows", s.a},
                         {"cols", s.b},
                         {"order", s.m},
                         {"minor_sizes", s.effective_minor_sizes()},
                         {"mode", mode_name(s.mode)},
                         {"budget", s.budget}};
  if (s.mode == CensusMode::random) {
    spec["count"] = s.count;
    spec["seed"] = s.seed;
  }
  nlohmann::json types = nlohmann::json::object();
  for (const auto& [type, n] : report.type_counts) types[type.to_literal()] = n;
  nlohmann::json loci = nlohmann::json::object();
  for (const auto& [size, n] : report.locus_counts) loci[std::to_string(size)] = n;
  return {{"spec", std::move(spec)},
          {"total", report.total},
          {"type_counts", std::move(types)},
          {"locus_counts", std::move(loci)},
          {"discrepancies", report.discrepancies},
          {"kernel_checked", report.kernel_checked},
          {"kernel_violations", report.kernel_violations},
          {"snf_failures", report.snf_failures},
          {"truncation_violations", report.truncation_violations},
          {"clean", report.clean()}};
}

std::string report_to_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "type,count\n";
  for (const auto& [type, n] : report.type_counts) out << '"' << type.to_literal() << "\"," << n << '\n';
  return out.str();
}

std::vector<ExponentRow> codim_exponents(const std::vector<CensusReport>& reports) {
  if (reports.size() < 2) throw Error(ErrorKind::input, "exponent fits need reports at two or more primes");
  std::set<std::uint32_t> primes;
  for (const auto& r : reports) {
    if (r.spec.mode != CensusMode::exhaustive) throw Error(ErrorKind::input, "exponent fits need exhaustive reports");
    if (r.spec.a != reports[0].spec.a || r.spec.b != reports[0].spec.b || r.spec.m != reports[0].spec.m) {
      throw Error(ErrorKind::input, "exponent fits need a common shape and order");
    }
    if (!primes.insert(r.spec.p).second) throw Error(ErrorKind::input, "exponent fits need distinct primes");
  }

  std::map<std::string, ExponentRow> rows;
  const auto record = [&rows](const std::string& stratum, std::uint32_t p, std::uint64_t n) {
    auto& row = rows[stratum];
    row.stratum = stratum;
    row.counts[p] += n;
  };
  for (const auto& r : reports) {
    record("total", r.spec.p, r.total);
    for (const auto& [type, n] : r.type_counts) record("type:" + type.to_literal(), r.spec.p, n);
    for (const auto& [s, n] : r.locus_counts) record("locus:s=" + std::to_string(s), r.spec.p, n);
  }

  std::vector<ExponentRow> out;
  out.reserve(rows.size());
  for (auto& [name, row] : rows) {
    for (std::uint32_t p : primes) row.counts.try_emplace(p, 0);
    for (const auto& [p, n] : row.counts) {
      if (n == 0) continue;
      row.per_prime[p] = static_cast<int>(std::llround(std::log(static_cast<double>(n)) / std::log(static_cast<double>(p))));
    }
    if (!row.per_prime.empty()) row.exponent = row.per_prime.rbegin()->second;
    row.consistent = row.per_prime.size() == primes.size() &&
                     std::all_of(row.per_prime.begin(), row.per_prime.end(),
                                 [&row](const auto& kv) { return kv.second == *row.exponent; });
    out.push_back(std::move(row));
  }
  return out;
}

ArcStream::ArcStream(const CensusSpec& spec, BaseMatrix<ModP> center) : spec_(spec), center_(std::move(center)) {
  if (center_.rows() != spec.a || center_.cols() != spec.b) {
    throw Error(ErrorKind::input, "arc center must be " + std::to_string(spec.a) + "x" + std::to_string(spec.b));
  }
  if (!(center_.tag() == FieldTag::prime(spec.p))) throw Error(ErrorKind::input, "arc center lives over another field");
  if (spec.mode == CensusMode::exhaustive) {
    size_ = saturating_pow(spec.p, static_cast<std::uint64_t>(spec.m) * spec.a * spec.b);
    if (size_ > spec.budget) {
      throw Error(ErrorKind::budget, "centered arc space exceeds the budget of " + std::to_string(spec.budget));
    }
  } else {
    if (spec.count > spec.budget) throw Error(ErrorKind::budget, "sample count exceeds the budget");
    size_ = spec.count;
  }
}

JetMatrix<ModP> ArcStream::at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorKind::range, "arc index out of range");
  const FieldTag tag = center_.tag();
  const std::size_t cells = spec_.a * spec_.b;
  const std::size_t levels = static_cast<std::size_t>(spec_.m) + 1;
  std::vector<std::uint32_t> digits(cells * levels);
  SampleStream rng(spec_.seed, index);
  for (std::size_t e = 0; e < cells; ++e) {
    digits[e * levels] = center_(e / spec_.b, e % spec_.b).value();
    for (std::size_t c = 1; c < levels; ++c) {
      if (spec_.mode == CensusMode::exhaustive) {
        digits[e * levels + c] = static_cast<std::uint32_t>(index % spec_.p);
        index /= spec_.p;
      } else {
        digits[e * levels + c] = rng.below(spec_.p);
      }
    }
  }
  return JetMatrix<ModP>::from_entries(spec_.a, spec_.b, spec_.m, tag, entries_from_digits(digits, cells, spec_.m, tag));
}

ArcStream sample_arcs_centered(const CensusSpec& spec, const BaseMatrix<ModP>& center) { return ArcStream(spec, center); }

std::optional<std::uint64_t> first_arc_outside_locus(const ArcStream& arcs, std::size_t s) {
  for (std::uint64_t i = 0; i < arcs.size(); ++i) {
    if (!minors_vanish(arcs.at(i), s)) return i;
  }
  return std::nullopt;
}

std::string_view to_string(FiberMethod method) noexcept {
  switch (method) {
    case FiberMethod::exhaustive: return "exhaustive";
    case FiberMethod::order_bound: return "order-bound";
    case FiberMethod::witness: return "witness";
  }
  return "exhaustive";
}

FiberCheck determinant_fiber_full(std::uint32_t p, std::size_t n, std::size_t corank, int m, std::uint64_t budget) {
  if (corank < 1 || corank > n) throw Error(ErrorKind::input, "corank must lie in [1, n]");
  if (m < 0) throw Error(ErrorKind::input, "jet level must be non-negative");
  CensusSpec spec;
  spec.p = p;
  spec.a = spec.b = n;
  spec.m = m;
  spec.budget = budget;
  spec.validate_field_and_shape();
  const FieldTag tag = FieldTag::prime(p);
  BaseMatrix<ModP> center(n, n, tag);
  for (std::size_t i = 0; i < n - corank; ++i) center(i, i) = ModP::one(tag);

  FiberCheck out;
  const std::uint64_t space = saturating_pow(p, static_cast<std::uint64_t>(m) * n * n);
  if (space <= budget) {
    const ArcStream arcs(spec, center);
    const auto hit = first_arc_outside_locus(arcs, n);
    out.method = FiberMethod::exhaustive;
    out.full = !hit.has_value();
    out.arcs_checked = hit ? *hit + 1 : arcs.size();
    if (hit) out.witness = arcs.at(*hit);
    return out;
  }
  if (static_cast<std::size_t>(m) < corank) {
    out.method = FiberMethod::order_bound;
    out.full = true;
    return out;
  }
  std::vector<int> orders(n - corank, 0);
  orders.resize(n, 1);
  auto witness = JetMatrix<ModP>::diagonal_monomials(n, n, orders, m, tag);
  out.method = FiberMethod::witness;
  out.arcs_checked = 1;
  out.full = minors_vanish(witness, n);
  if (!out.full) out.witness = std::move(witness);
  return out;
}

}  // namespace jetscheme
