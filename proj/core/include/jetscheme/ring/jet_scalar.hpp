#pragma once

// Elements of the truncated polynomial ring k[t]/(t^{m+1}).

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "jetscheme/error.hpp"
#include "jetscheme/ring/field.hpp"

namespace jetscheme {

template <ExactField K>
class JetScalar {
 public:
  using coefficient_type = K;
  using storage_type = boost::container::small_vector<K, 8>;

  JetScalar() = default;

  static JetScalar zero(int order, FieldTag tag) {
    check_order(order);
    return JetScalar(order, tag, storage_type(static_cast<std::size_t>(order) + 1, K::zero(tag)));
  }
  static JetScalar constant(K c, int order) {
    JetScalar r = zero(order, c.tag());
    r.coeffs_[0] = std::move(c);
    return r;
  }
  static JetScalar one(int order, FieldTag tag) { return constant(K::one(tag), order); }
  // t^k; zero when k > order.
  static JetScalar monomial(int k, int order, FieldTag tag) {
    JetScalar r = zero(order, tag);
    if (k <= order) r.coeffs_[static_cast<std::size_t>(k)] = K::one(tag);
    return r;
  }
  // Coefficients c_0..c_m. Throws Error(incompatible_operands) if they disagree on the field.
  template <class Range>
  static JetScalar from_coefficients(const Range& coeffs, int order, FieldTag tag) {
    JetScalar r = zero(order, tag);
    std::size_t i = 0;
    for (const auto& c : coeffs) {
      if (c.tag() != tag) {
        throw Error(ErrorKind::incompatible_operands, "coefficient field differs from " + to_string(tag));
      }
      if (i > static_cast<std::size_t>(order)) {
        throw Error(ErrorKind::range, "more than order+1 coefficients supplied");
      }
      r.coeffs_[i++] = c;
    }
    return r;
  }

  int order() const noexcept { return order_; }
  FieldTag tag() const noexcept { return tag_; }
  const K& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const storage_type& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const K& c) { return c.is_zero(); });
  }
  bool is_unit() const { return !coeffs_[0].is_zero(); }

  // Least index with a nonzero coefficient; order()+1 for the zero element.
  int t_order() const {
    for (int i = 0; i <= order_; ++i) {
      if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return i;
    }
    return order_ + 1;
  }

  JetScalar operator+(const JetScalar& rhs) const {
    check_compatible(rhs);
    JetScalar r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += rhs.coeffs_[i];
    return r;
  }
  JetScalar operator-(const JetScalar& rhs) const {
    check_compatible(rhs);
    JetScalar r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= rhs.coeffs_[i];
    return r;
  }
  JetScalar operator-() const {
    JetScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  // Convolution truncated at degree m.
  JetScalar operator*(const JetScalar& rhs) const {
    check_compatible(rhs);
    JetScalar r = zero(order_, tag_);
    for (int i = 0; i <= order_; ++i) {
      const K& a = coeffs_[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      for (int j = 0; i + j <= order_; ++j) {
        const K& b = rhs.coeffs_[static_cast<std::size_t>(j)];
        if (b.is_zero()) continue;
        r.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
      }
    }
    return r;
  }
  JetScalar& operator+=(const JetScalar& rhs) { return *this = *this + rhs; }
  JetScalar& operator-=(const JetScalar& rhs) { return *this = *this - rhs; }
  JetScalar& operator*=(const JetScalar& rhs) { return *this = *this * rhs; }

  JetScalar scaled(const K& c) const {
    JetScalar r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  // Two-sided inverse by the coefficient recursion b_0 = 1/c_0, b_k = -b_0 * sum_{i=1..k} c_i b_{k-i}.
  // Throws Error(non_unit) when c_0 = 0.
  JetScalar inverse() const {
    if (!is_unit()) throw Error(ErrorKind::non_unit, "jet scalar " + to_literal() + " is not a unit");
    JetScalar b = zero(order_, tag_);
    const K inv0 = coeffs_[0].inverse();
    b.coeffs_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
      K acc = K::zero(tag_);
      for (int i = 1; i <= k; ++i) {
        acc += coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(k - i)];
      }
      b.coeffs_[static_cast<std::size_t>(k)] = -(inv0 * acc);
    }
    return b;
  }

  // Image in k[t]/(t^{j+1}). Throws Error(range) for j outside [0, m].
  JetScalar truncate(int j) const {
    if (j < 0 || j > order_) {
      throw Error(ErrorKind::range, "truncation level " + std::to_string(j) + " outside [0, " +
                                        std::to_string(order_) + "]");
    }
    JetScalar r = zero(j, tag_);
    std::copy_n(coeffs_.begin(), j + 1, r.coeffs_.begin());
    return r;
  }

  // The unique q with q_{m-k+1..m} = 0 and t^k * q = *this. Requires t_order() >= k.
  JetScalar divide_by_t_power(int k) const {
    JetScalar r = zero(order_, tag_);
    for (int i = k; i <= order_; ++i) {
      r.coeffs_[static_cast<std::size_t>(i - k)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return r;
  }

  // Canonical literal "c0 + c1*t + ... + cm*t^m", omitting zero terms.
  std::string to_literal() const;

  // Parses the literal syntax; column numbers in ParseError are 1-based within `text`.
  static JetScalar parse(std::string_view text, int order, FieldTag tag);

  friend bool operator==(const JetScalar& a, const JetScalar& b) {
    return a.order_ == b.order_ && a.tag_ == b.tag_ && a.coeffs_ == b.coeffs_;
  }

 private:
  JetScalar(int order, FieldTag tag, storage_type coeffs)
      : order_(order), tag_(tag), coeffs_(std::move(coeffs)) {}

  static void check_order(int order) {
    if (order < 0) throw Error(ErrorKind::range, "negative truncation order");
  }

  void check_compatible(const JetScalar& rhs) const {
    if (rhs.order_ != order_ || rhs.tag_ != tag_) {
      throw Error(ErrorKind::incompatible_operands,
                  "jet scalars over " + to_string(tag_) + "[t]/(t^" + std::to_string(order_ + 1) +
                      ") and " + to_string(rhs.tag_) + "[t]/(t^" + std::to_string(rhs.order_ + 1) +
                      ")");
    }
  }

  int order_ = 0;
  FieldTag tag_{};
  storage_type coeffs_;
};

// Named form of the ring operations.
enum class ArithOp { add, sub, mul };

template <ExactField K>
JetScalar<K> arith(const JetScalar<K>& a, const JetScalar<K>& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  return a;
}

namespace detail {

template <ExactField K>
bool is_negative_coefficient(const K& c) {
  if constexpr (std::same_as<K, Rational>) {
    return c.is_negative();
  } else {
    return false;
  }
}

inline std::string monomial_text(int k) {
  if (k == 1) return "t";
  return "t^" + std::to_string(k);
}

}  // namespace detail

template <ExactField K>
std::string JetScalar<K>::to_literal() const {
  std::string out;
  for (int i = 0; i <= order_; ++i) {
    K c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = detail::is_negative_coefficient(c);
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += c.to_string();
    } else if (c == K::one(tag_)) {
      out += detail::monomial_text(i);
    } else {
      out += c.to_string() + "*" + detail::monomial_text(i);
    }
  }
  return out.empty() ? std::string("0") : out;
}

template <ExactField K>
JetScalar<K> JetScalar<K>::parse(std::string_view text, int order, FieldTag tag) {
  JetScalar r = zero(order, tag);
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  const auto fail = [&](const std::string& what) -> void {
    throw ParseError(what, 0, pos + 1);
  };

  skip_ws();
  if (pos == text.size()) fail("empty jet literal");
  bool first = true;
  while (true) {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;

    // Optional coefficient.
    const std::size_t coef_start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    std::string_view coef_text = text.substr(coef_start, pos - coef_start);
    K coef = K::one(tag);
    if (!coef_text.empty()) {
      try {
        coef = K::parse(coef_text, tag);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), 0, coef_start + 1);
      }
    }
    skip_ws();

    int degree = 0;
    bool has_star = false;
    if (pos < text.size() && text[pos] == '*') {
      if (coef_text.empty()) fail("'*' without a coefficient");
      has_star = true;
      ++pos;
      skip_ws();
    }
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      degree = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        const std::size_t exp_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (exp_start == pos || pos - exp_start > 6) fail("malformed exponent");
        degree = std::stoi(std::string(text.substr(exp_start, pos - exp_start)));
      }
    } else if (has_star) {
      fail("expected 't' after '*'");
    } else if (coef_text.empty()) {
      fail("expected a coefficient or 't'");
    }

    if (negative) coef = -coef;
    if (degree <= order) r.coeffs_[static_cast<std::size_t>(degree)] += coef;

    skip_ws();
    if (pos == text.size()) break;
  }
  return r;
}

}  // namespace jetscheme
