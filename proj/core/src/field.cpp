#include "jetscheme/ring/field.hpp"

#include <cctype>

namespace jetscheme {

namespace {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strips an optional sign; returns false on an empty or non-decimal body.
bool split_sign(std::string_view text, bool& negative, std::string_view& digits) {
  negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  digits = text;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witnesses for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldTag FieldTag::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw Error(ErrorKind::range, "field characteristic " + std::to_string(p) +
                                      " is not a prime below 2^31");
  }
  return FieldTag{static_cast<std::uint32_t>(p)};
}

std::string to_string(FieldTag tag) {
  return tag.is_rational() ? std::string("Q") : "F_" + std::to_string(tag.p);
}

ModP ModP::from_int(std::int64_t n, FieldTag tag) {
  if (tag.is_rational()) {
    throw Error(ErrorKind::incompatible_operands, "prime field element requested over Q");
  }
  std::int64_t r = n % static_cast<std::int64_t>(tag.p);
  if (r < 0) r += tag.p;
  return ModP(static_cast<std::uint32_t>(r), tag.p);
}

ModP ModP::parse(std::string_view text, FieldTag tag) {
  if (tag.is_rational()) {
    throw Error(ErrorKind::incompatible_operands, "prime field element requested over Q");
  }
  bool negative = false;
  std::string_view digits;
  if (!split_sign(text, negative, digits)) {
    throw ParseError("malformed integer coefficient '" + std::string(text) + "'", 0, 0);
  }
  std::uint64_t r = 0;
  for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % tag.p;
  ModP v(static_cast<std::uint32_t>(r), tag.p);
  return negative ? -v : v;
}

ModP ModP::inverse() const {
  if (value_ == 0) throw Error(ErrorKind::non_unit, "zero has no inverse in " + jetscheme::to_string(tag()));
  return ModP(static_cast<std::uint32_t>(pow_mod(value_, modulus_ - 2, modulus_)), modulus_);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::non_unit, "rational with zero denominator");
  boost::multiprecision::cpp_int n = num;
  boost::multiprecision::cpp_int d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  value_ = value_type(n, d);
}

Rational Rational::from_int(std::int64_t n, FieldTag tag) {
  if (!tag.is_rational()) {
    throw Error(ErrorKind::incompatible_operands, "rational requested over " + jetscheme::to_string(tag));
  }
  return Rational(value_type(n));
}

Rational Rational::parse(std::string_view text, FieldTag tag) {
  if (!tag.is_rational()) {
    throw Error(ErrorKind::incompatible_operands, "rational requested over " + jetscheme::to_string(tag));
  }
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  bool negative = false;
  std::string_view digits;
  if (!split_sign(num_text, negative, digits)) {
    throw ParseError("malformed rational coefficient '" + std::string(text) + "'", 0, 0);
  }
  boost::multiprecision::cpp_int num{std::string(digits)};
  if (negative) num = -num;
  boost::multiprecision::cpp_int den = 1;
  if (slash != std::string_view::npos) {
    bool den_negative = false;
    std::string_view den_digits;
    if (!split_sign(text.substr(slash + 1), den_negative, den_digits) || den_negative) {
      throw ParseError("malformed rational coefficient '" + std::string(text) + "'", 0, 0);
    }
    den = boost::multiprecision::cpp_int(std::string(den_digits));
    if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 0);
  }
  return Rational(value_type(num, den));
}

Rational Rational::inverse() const {
  if (value_.is_zero()) throw Error(ErrorKind::non_unit, "zero has no inverse in Q");
  return Rational(1 / value_);
}

std::string Rational::to_string() const {
  const auto num = boost::multiprecision::numerator(value_);
  const auto den = boost::multiprecision::denominator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace jetscheme
