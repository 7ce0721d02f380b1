#pragma once

// Partition types of jet matrices and the combinatorics derived from them.
//
// Parts are stored weakly increasing, 1 <= parts[0] <= ... <= parts[l-1] <= cap, matching the
// way invariant-factor orders come out of the normal form. The empty partition is legal.

#include <compare>
#include <functional>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jetscheme/error.hpp"

namespace jetscheme {

class Partition {
 public:
  Partition() = default;
  // Throws Error(instance) unless parts are weakly increasing within [1, cap] and cap >= 1.
  Partition(std::vector<int> parts, int cap);

  static Partition empty(int cap) { return Partition({}, cap); }
  static Partition from_unsorted(std::vector<int> parts, int cap);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int cap() const noexcept { return cap_; }
  bool is_empty() const noexcept { return parts_.empty(); }
  // lambda_l, or 0 for the empty partition.
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
  // 1-based access lambda_i; lambda_0 = 0 by convention.
  int part(int i) const { return i == 0 ? 0 : parts_.at(static_cast<std::size_t>(i - 1)); }
  int sum() const noexcept;

  // "(a,b,c)@cap"; the empty partition prints as "()@cap".
  std::string to_literal() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.cap_ <=> b.cap_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int cap_ = 1;
};

// kappa_1 >= kappa_2 >= ... >= 0; values()[j-1] is kappa_j.
class Signature {
 public:
  Signature() = default;
  // Throws Error(input) unless weakly decreasing and non-negative.
  explicit Signature(std::vector<int> values);

  const std::vector<int>& values() const noexcept { return values_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  // 1-based; zero beyond the stored length.
  int at(int j) const { return j >= 1 && j <= size() ? values_[static_cast<std::size_t>(j - 1)] : 0; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> values_;
};

// #{k : lambda_k >= i}, i >= 1.
int n_of(const Partition& lambda, int i);
// #{k : lambda_k == i}, i >= 1.
int r_of(const Partition& lambda, int i);

// lambda-bar_k = min(lambda_k, i), re-capped at i.
Partition truncate_partition(const Partition& lambda, int i);

// Determinant-vanishing criterion for a square jet matrix of type lambda at level m:
// sum lambda_i >= m+1. Throws Error(instance) when cap != m+1.
bool theta_jet_criterion(const Partition& lambda, int m);

// Vanishing of the corank-r minors: the l-r smallest parts sum to >= m+1.
// Throws Error(instance) when cap != m+1 or r > l.
bool wrd_jet_criterion(const Partition& lambda, int m, int r);

// Dimension of sections at truncation level j: sum_{k=1}^{j+1} n_k(lambda), 0 <= j <= cap-1.
int h0_from_type(const Partition& lambda, int j);

// kappa_j = n_{j+1}(lambda) for 1 <= j <= cap-1.
Signature signature_of(const Partition& lambda);

struct SquareSums {
  std::int64_t lhs = 0;  // sum_{i=1}^{lambda_l} n_i(lambda)^2
  std::int64_t rhs = 0;  // sum_{i=1}^{l} (l-i+1)^2 (lambda_i - lambda_{i-1})
};
// Throws Error(instance) on the empty partition.
SquareSums square_identity(const Partition& lambda);

// Restartable lexicographic walk over weakly increasing sequences of a fixed length with
// parts in [1, cap], optionally filtered.
class PartitionStream {
 public:
  using Filter = std::function<bool(const Partition&)>;

  PartitionStream(int length, int cap, Filter filter = {});

  std::optional<Partition> next();
  void reset();

 private:
  bool advance();

  int length_;
  int cap_;
  Filter filter_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

// All of Lambda_{l,cap}.
std::vector<Partition> all_partitions(int length, int cap);

// The lambda in Lambda_{l,m+1} satisfying wrd_jet_criterion(lambda, m, r), in lexicographic
// order. Throws Error(range) unless 0 <= r < l.
PartitionStream admissible_stream(int l, int r, int m);

std::vector<Partition> enumerate_admissible(int l, int r, int m);

}  // namespace jetscheme
