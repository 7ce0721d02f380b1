#pragma once

// Exhaustive and sampled enumeration of matrix jet spaces over F_p.
//
// A matrix is encoded as a mixed-radix integer whose digits are its coefficients, entry-major in
// row-major entry order and increasing t-degree within an entry, least significant first.
// Shards are contiguous index ranges and reports merge by addition.

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetscheme/linalg/base_matrix.hpp"
#include "jetscheme/linalg/jet_matrix.hpp"
#include "jetscheme/partitions/partition.hpp"

namespace jetscheme {

inline constexpr std::uint64_t kDefaultCensusBudget = std::uint64_t{1} << 24;

enum class CensusMode { exhaustive, random };

struct CensusSpec {
  std::uint32_t p = 2;
  std::size_t a = 1;
  std::size_t b = 1;
  int m = 0;
  std::vector<std::size_t> minor_sizes;  // empty selects every s in [1, min(a,b)]
  CensusMode mode = CensusMode::exhaustive;
  std::uint64_t count = 0;  // random mode only
  std::uint64_t seed = 0;   // random mode only
  std::uint64_t budget = kDefaultCensusBudget;
  bool verify_snf = true;
  bool verify_truncation = true;

  // Throws Error(input) on malformed fields and Error(budget) when the run would exceed budget.
  void validate() const;
  // The prime, shape, order and minor-size checks alone.
  void validate_field_and_shape() const;
  // p^{(m+1)ab}, saturating at UINT64_MAX.
  std::uint64_t space_size() const;
  // Matrices visited by run_census.
  std::uint64_t visit_count() const;
  std::vector<std::size_t> effective_minor_sizes() const;

  friend bool operator==(const CensusSpec&, const CensusSpec&) = default;
};

struct CensusReport {
  CensusSpec spec;
  std::uint64_t total = 0;
  std::map<Partition, std::uint64_t> type_counts;
  std::map<std::size_t, std::uint64_t> locus_counts;  // s -> matrices whose s x s minors all vanish
  std::uint64_t discrepancies = 0;                    // minors oracle vs partition criterion
  std::uint64_t kernel_checked = 0;                   // matrices with cols <= rows
  std::uint64_t kernel_violations = 0;
  std::uint64_t snf_failures = 0;
  std::uint64_t truncation_violations = 0;

  // Componentwise addition. Throws Error(input) if the specs differ.
  CensusReport& merge(const CensusReport& other);
  bool clean() const noexcept {
    return discrepancies == 0 && kernel_violations == 0 && snf_failures == 0 && truncation_violations == 0;
  }

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

// The index-th matrix of the run: the mixed-radix decoding in exhaustive mode, the index-th
// sample of the seeded stream in random mode.
JetMatrix<ModP> census_matrix(const CensusSpec& spec, std::uint64_t index);

// Runs every check on one matrix and tallies it into the report.
void census_visit(const JetMatrix<ModP>& A, CensusReport& report);

CensusReport run_census_range(const CensusSpec& spec, std::uint64_t begin, std::uint64_t end);

// Splits [0, visit_count) into `shards` contiguous ranges, one thread each, and merges in order.
CensusReport run_census(const CensusSpec& spec, unsigned shards = 1);

nlohmann::json report_to_json(const CensusReport& report);
// "type,count" rows in partition order.
std::string report_to_csv(const CensusReport& report);

struct ExponentRow {
  std::string stratum;  // "total", "type:<partition>" or "locus:s=<s>"
  std::map<std::uint32_t, std::uint64_t> counts;
  std::map<std::uint32_t, int> per_prime;  // nearest integer to log_p(count); absent when count = 0
  std::optional<int> exponent;             // estimate at the largest prime with a nonzero count
  bool consistent = false;                 // every per-prime estimate agrees
};

// Leading exponents of stratum counts as functions of p. Strata missing at some prime count as 0.
// Throws Error(input) unless there are >= 2 exhaustive reports at distinct primes with equal shape
// and order.
std::vector<ExponentRow> codim_exponents(const std::vector<CensusReport>& reports);

// Arcs with a fixed constant term: every higher coefficient is enumerated in exhaustive mode
// (p^{m ab} arcs, subject to the budget) or sampled from the seeded stream in random mode.
class ArcStream {
 public:
  // Throws Error(input) when the center does not have shape a x b or lives over another field.
  ArcStream(const CensusSpec& spec, BaseMatrix<ModP> center);

  std::uint64_t size() const noexcept { return size_; }
  JetMatrix<ModP> at(std::uint64_t index) const;

 private:
  CensusSpec spec_;
  BaseMatrix<ModP> center_;
  std::uint64_t size_ = 0;
};

ArcStream sample_arcs_centered(const CensusSpec& spec, const BaseMatrix<ModP>& center);

// Index of the first arc whose s x s minors do not all vanish, if any.
std::optional<std::uint64_t> first_arc_outside_locus(const ArcStream& arcs, std::size_t s);

enum class FiberMethod { exhaustive, order_bound, witness };

std::string_view to_string(FiberMethod method) noexcept;

struct FiberCheck {
  bool full = false;
  FiberMethod method = FiberMethod::exhaustive;
  std::uint64_t arcs_checked = 0;
  std::optional<JetMatrix<ModP>> witness;  // an arc outside the locus when not full
};

// Whether every m-jet of n x n matrices centered at diag(1,..,1,0,..,0) (corank zeros) has
// vanishing determinant. Scans all arcs when p^{m n^2} fits the budget. Otherwise: an arc over a
// corank-c center has c invariant orders >= 1, so det has order >= c and the fiber is full for
// m < c; for m >= c the arc diag(1,..,1,t,..,t) has det = t^c and is a witness.
// Throws Error(input) unless 1 <= corank <= n.
FiberCheck determinant_fiber_full(std::uint32_t p, std::size_t n, std::size_t corank, int m,
                                  std::uint64_t budget = kDefaultCensusBudget);

}  // namespace jetscheme
