#include "jetscheme/partitions/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace jetscheme {

namespace {

void require_cap(const Partition& lambda, int m) {
  if (lambda.cap() != m + 1) {
    throw Error(ErrorKind::instance, "partition " + lambda.to_literal() + " does not have cap m+1 = " +
                                         std::to_string(m + 1));
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts, int cap) : parts_(std::move(parts)), cap_(cap) {
  if (cap_ < 1) throw Error(ErrorKind::instance, "partition cap must be at least 1");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || parts_[i] > cap_) {
      throw Error(ErrorKind::instance, "partition part " + std::to_string(parts_[i]) +
                                           " outside [1, " + std::to_string(cap_) + "]");
    }
    if (i > 0 && parts_[i] < parts_[i - 1]) {
      throw Error(ErrorKind::instance, "partition parts must be weakly increasing");
    }
  }
}

Partition Partition::from_unsorted(std::vector<int> parts, int cap) {
  std::sort(parts.begin(), parts.end());
  return Partition(std::move(parts), cap);
}

int Partition::sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_literal() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  out += ")@" + std::to_string(cap_);
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto read_int = [&]() -> int {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw ParseError("expected a positive integer", 1, start + 1);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  const auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", 1, pos + 1);
    }
    ++pos;
  };

  expect('(');
  std::vector<int> parts;
  skip_ws();
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    parts.push_back(read_int());
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        parts.push_back(read_int());
        continue;
      }
      expect(')');
      break;
    }
  }
  expect('@');
  const int cap = read_int();
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after partition", 1, pos + 1);
  try {
    return Partition(std::move(parts), cap);
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

Signature::Signature(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < 0) throw Error(ErrorKind::input, "signature entries must be non-negative");
    if (j > 0 && values_[j] > values_[j - 1]) {
      throw Error(ErrorKind::input, "signature must be weakly decreasing");
    }
  }
}

int n_of(const Partition& lambda, int i) {
  const auto& p = lambda.parts();
  return static_cast<int>(p.end() - std::lower_bound(p.begin(), p.end(), i));
}

int r_of(const Partition& lambda, int i) {
  const auto& p = lambda.parts();
  const auto [lo, hi] = std::equal_range(p.begin(), p.end(), i);
  return static_cast<int>(hi - lo);
}

Partition truncate_partition(const Partition& lambda, int i) {
  if (i < 1) throw Error(ErrorKind::range, "truncation level must be at least 1");
  std::vector<int> parts = lambda.parts();
  for (int& x : parts) x = std::min(x, i);
  return Partition(std::move(parts), i);
}

bool theta_jet_criterion(const Partition& lambda, int m) {
  require_cap(lambda, m);
  const int by_parts = lambda.sum();
  int by_r = 0;
  int by_n = 0;
  for (int j = 1; j <= m + 1; ++j) {
    by_r += r_of(lambda, j) * j;
    by_n += n_of(lambda, j);
  }
  if (by_parts != by_r || by_parts != by_n) {
    throw std::logic_error("criterion forms disagree on " + lambda.to_literal());
  }
  return by_parts >= m + 1;
}

bool wrd_jet_criterion(const Partition& lambda, int m, int r) {
  require_cap(lambda, m);
  const int l = lambda.length();
  if (r < 0 || r > l) {
    throw Error(ErrorKind::instance, "r = " + std::to_string(r) + " outside [0, " + std::to_string(l) + "]");
  }
  const int s = l - r;
  int direct = 0;
  int weighted = 0;
  for (int i = 1; i <= s; ++i) {
    direct += lambda.part(i);
    weighted += (l - i - r + 1) * (lambda.part(i) - lambda.part(i - 1));
  }
  if (direct != weighted) {
    throw std::logic_error("criterion forms disagree on " + lambda.to_literal());
  }
  return direct >= m + 1;
}

int h0_from_type(const Partition& lambda, int j) {
  if (j < 0 || j > lambda.cap() - 1) {
    throw Error(ErrorKind::range, "level " + std::to_string(j) + " outside [0, " +
                                      std::to_string(lambda.cap() - 1) + "]");
  }
  int total = 0;
  for (int k = 1; k <= j + 1; ++k) total += n_of(lambda, k);
  return total;
}

Signature signature_of(const Partition& lambda) {
  std::vector<int> kappa;
  kappa.reserve(static_cast<std::size_t>(lambda.cap() - 1));
  for (int j = 1; j <= lambda.cap() - 1; ++j) kappa.push_back(n_of(lambda, j + 1));
  return Signature(std::move(kappa));
}

SquareSums square_identity(const Partition& lambda) {
  if (lambda.is_empty()) throw Error(ErrorKind::instance, "square identity needs l >= 1");
  SquareSums out;
  for (int i = 1; i <= lambda.largest(); ++i) {
    const std::int64_t n = n_of(lambda, i);
    out.lhs += n * n;
  }
  const int l = lambda.length();
  for (int i = 1; i <= l; ++i) {
    const std::int64_t w = l - i + 1;
    out.rhs += w * w * (lambda.part(i) - lambda.part(i - 1));
  }
  return out;
}

PartitionStream::PartitionStream(int length, int cap, Filter filter)
    : length_(length), cap_(cap), filter_(std::move(filter)) {
  if (length < 0 || cap < 1) throw Error(ErrorKind::range, "partition stream needs length >= 0, cap >= 1");
}

void PartitionStream::reset() {
  current_.clear();
  started_ = false;
  done_ = false;
}

// Odometer step to the lexicographic successor among weakly increasing sequences.
bool PartitionStream::advance() {
  if (!started_) {
    started_ = true;
    current_.assign(static_cast<std::size_t>(length_), 1);
    return true;
  }
  for (int i = length_ - 1; i >= 0; --i) {
    if (current_[static_cast<std::size_t>(i)] < cap_) {
      const int v = current_[static_cast<std::size_t>(i)] + 1;
      for (int k = i; k < length_; ++k) current_[static_cast<std::size_t>(k)] = v;
      return true;
    }
  }
  return false;
}

std::optional<Partition> PartitionStream::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    Partition candidate(current_, cap_);
    if (!filter_ || filter_(candidate)) return candidate;
  }
  return std::nullopt;
}

std::vector<Partition> all_partitions(int length, int cap) {
  std::vector<Partition> out;
  PartitionStream stream(length, cap);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

PartitionStream admissible_stream(int l, int r, int m) {
  if (r < 0 || r >= l) {
    throw Error(ErrorKind::range, "admissible enumeration needs 0 <= r < l");
  }
  if (m < 0) throw Error(ErrorKind::range, "negative jet level");
  return PartitionStream(l, m + 1, [r, m](const Partition& lambda) {
    return wrd_jet_criterion(lambda, m, r);
  });
}

std::vector<Partition> enumerate_admissible(int l, int r, int m) {
  std::vector<Partition> out;
  auto stream = admissible_stream(l, r, m);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace jetscheme
