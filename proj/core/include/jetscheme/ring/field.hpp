#pragma once

// Exact base fields: prime fields F_p with a runtime modulus, and the rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "jetscheme/error.hpp"

namespace jetscheme {

bool is_prime(std::uint64_t n) noexcept;

// Identifies the base field. p == 0 denotes Q.
struct FieldTag {
  std::uint32_t p = 0;

  static FieldTag rationals() noexcept { return FieldTag{0}; }
  // Throws Error(range) unless p is a prime below 2^31.
  static FieldTag prime(std::uint64_t p);

  bool is_rational() const noexcept { return p == 0; }
  friend bool operator==(FieldTag, FieldTag) = default;
};

std::string to_string(FieldTag tag);

// Residue class modulo a runtime prime. The value is always reduced to [0, p).
class ModP {
 public:
  ModP() = default;

  static ModP from_int(std::int64_t n, FieldTag tag);
  static ModP zero(FieldTag tag) { return from_int(0, tag); }
  static ModP one(FieldTag tag) { return from_int(1, tag); }
  // Accepts an optionally signed decimal integer of any length.
  static ModP parse(std::string_view text, FieldTag tag);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  FieldTag tag() const noexcept { return FieldTag{modulus_}; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  ModP operator+(ModP rhs) const {
    check(rhs);
    std::uint32_t s = value_ + rhs.value_;
    if (s >= modulus_) s -= modulus_;
    return ModP(s, modulus_);
  }
  ModP operator-(ModP rhs) const {
    check(rhs);
    return ModP(value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_,
                modulus_);
  }
  ModP operator*(ModP rhs) const {
    check(rhs);
    return ModP(static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * rhs.value_ %
                                           modulus_),
                modulus_);
  }
  ModP operator-() const { return ModP(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  ModP& operator+=(ModP rhs) { return *this = *this + rhs; }
  ModP& operator-=(ModP rhs) { return *this = *this - rhs; }
  ModP& operator*=(ModP rhs) { return *this = *this * rhs; }

  // Throws Error(non_unit) on zero.
  ModP inverse() const;

  std::string to_string() const { return std::to_string(value_); }

  friend bool operator==(ModP, ModP) = default;

 private:
  ModP(std::uint32_t value, std::uint32_t modulus) : value_(value), modulus_(modulus) {}

  void check(ModP rhs) const {
    if (rhs.modulus_ != modulus_) {
      throw Error(ErrorKind::incompatible_operands, "prime field elements with different moduli");
    }
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  explicit Rational(value_type v) : value_(std::move(v)) {}
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_int(std::int64_t n, FieldTag tag);
  static Rational zero(FieldTag tag) { return from_int(0, tag); }
  static Rational one(FieldTag tag) { return from_int(1, tag); }
  // Accepts "n" or "n/d" with optional sign.
  static Rational parse(std::string_view text, FieldTag tag = FieldTag::rationals());

  const value_type& value() const noexcept { return value_; }
  FieldTag tag() const noexcept { return FieldTag::rationals(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  bool is_negative() const { return value_.sign() < 0; }

  Rational operator+(const Rational& rhs) const { return Rational(value_ + rhs.value_); }
  Rational operator-(const Rational& rhs) const { return Rational(value_ - rhs.value_); }
  Rational operator*(const Rational& rhs) const { return Rational(value_ * rhs.value_); }
  Rational operator/(const Rational& rhs) const { return *this * rhs.inverse(); }
  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }

  Rational inverse() const;

  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  value_type value_{0};
};

template <class K>
concept ExactField = std::regular<K> && requires(const K a, const K b, FieldTag f, std::int64_t n,
                                                 std::string_view s) {
  { K::from_int(n, f) } -> std::same_as<K>;
  { K::parse(s, f) } -> std::same_as<K>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.tag() } -> std::same_as<FieldTag>;
  { a.to_string() } -> std::same_as<std::string>;
};

static_assert(ExactField<ModP>);
static_assert(ExactField<Rational>);

}  // namespace jetscheme
