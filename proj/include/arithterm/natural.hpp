#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "arithterm/error.hpp"

namespace arithterm {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Square-and-multiply; pow_u64(0, 0) == 1.
inline BigInt pow_u64(BigInt base, std::uint64_t exp) {
  BigInt acc(1);
  while (exp != 0) {
    if (exp & 1) acc *= base;
    exp >>= 1;
    if (exp != 0) base *= base;
  }
  return acc;
}

}  // namespace detail

/// Arbitrary-precision non-negative integer: the value domain of arithmetic
/// terms. Construction from a negative value throws. The checked operators
/// `-`, `/` and `%` reject underflow and zero divisors; the totalized
/// variants used by the term evaluator live below as free functions.
class Natural {
 public:
  Natural() = default;

  template <std::unsigned_integral T>
  Natural(T v) : v_(v) {}

  template <std::signed_integral T>
  Natural(T v) : v_(v) {
    if (v < 0) throw DomainError("Natural cannot hold a negative value");
  }

  explicit Natural(BigInt v) : v_(std::move(v)) {
    if (v_ < 0)
      throw DomainError("Natural cannot hold negative value " + v_.str());
  }

  /// Parses a decimal numeral (digits only, no sign).
  static Natural from_decimal(std::string_view text) {
    if (text.empty()) throw DomainError("empty numeral");
    for (char c : text)
      if (c < '0' || c > '9')
        throw DomainError("invalid decimal numeral '" + std::string(text) +
                          "'");
    // strip leading zeros; cpp_int would read them as an octal prefix
    std::size_t first = text.find_first_not_of('0');
    if (first == std::string_view::npos) return Natural();
    Natural n;
    n.v_ = BigInt(std::string(text.substr(first)));
    return n;
  }

  const BigInt& big() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_.is_zero(); }
  std::string str() const { return v_.str(); }

  /// Bits in the binary representation; 0 for zero.
  std::size_t bit_length() const {
    return v_.is_zero() ? 0 : boost::multiprecision::msb(v_) + 1;
  }

  bool fits_uint64() const { return bit_length() <= 64; }

  std::uint64_t to_uint64() const {
    if (!fits_uint64())
      throw EvalError("value " + v_.str() + " exceeds a machine word");
    return v_.convert_to<std::uint64_t>();
  }

  friend Natural operator+(const Natural& a, const Natural& b) {
    return Natural(nocheck{}, a.v_ + b.v_);
  }
  friend Natural operator*(const Natural& a, const Natural& b) {
    return Natural(nocheck{}, a.v_ * b.v_);
  }

  /// Exact subtraction; throws DomainError when b > a.
  friend Natural operator-(const Natural& a, const Natural& b) {
    if (b.v_ > a.v_)
      throw DomainError("natural subtraction underflow: " + a.v_.str() +
                        " - " + b.v_.str());
    return Natural(nocheck{}, a.v_ - b.v_);
  }

  /// Floored quotient; throws DomainError on zero divisor.
  friend Natural operator/(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Natural(nocheck{}, a.v_ / b.v_);
  }

  /// Remainder; throws DomainError on zero divisor.
  friend Natural operator%(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw DomainError("modulus by zero");
    return Natural(nocheck{}, a.v_ % b.v_);
  }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  Natural& operator-=(const Natural& o) { return *this = *this - o; }

  friend bool operator==(const Natural& a, const Natural& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = a.v_.compare(b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.v_;
  }

 private:
  struct nocheck {};
  Natural(nocheck, BigInt v) : v_(std::move(v)) {}

  BigInt v_;  // invariant: v_ >= 0
};

/// a ∸ b = max(a - b, 0).
inline Natural trunc_sub(const Natural& a, const Natural& b) {
  return b >= a ? Natural() : a - b;
}

/// ⌊a/b⌋ with the convention ⌊a/0⌋ = 0.
inline Natural floor_div(const Natural& a, const Natural& b) {
  return b.is_zero() ? Natural() : a / b;
}

/// a mod b, derived as a ∸ b·⌊a/b⌋; hence m mod 0 = m and m mod 1 = 0.
inline Natural mod(const Natural& a, const Natural& b) {
  return trunc_sub(a, b * floor_div(a, b));
}

/// base^exp with 0^0 = 1. The exponent must fit a machine word; larger
/// exponents are rejected with EvalError rather than attempted.
inline Natural pow(const Natural& base, const Natural& exp) {
  if (!exp.fits_uint64())
    throw EvalError("exponent " + exp.str() + " exceeds a machine word");
  return Natural(detail::pow_u64(base.big(), exp.to_uint64()));
}

/// Signed big integer kept as sign and magnitude; needed only for the one
/// formula whose numerator goes negative. sign() is 0 exactly for zero.
class SignedValue {
 public:
  SignedValue() = default;
  SignedValue(const Natural& n) : v_(n.big()) {}
  explicit SignedValue(BigInt v) : v_(std::move(v)) {}

  template <std::integral T>
  SignedValue(T v) : v_(v) {}

  int sign() const noexcept { return v_.sign(); }
  Natural magnitude() const {
    return Natural(boost::multiprecision::abs(v_));
  }
  const BigInt& big() const noexcept { return v_; }
  bool is_negative() const noexcept { return v_ < 0; }
  std::string str() const { return v_.str(); }

  Natural to_natural() const {
    if (is_negative())
      throw DomainError("negative value " + v_.str() +
                        " is outside the naturals");
    return Natural(v_);
  }

  friend SignedValue operator+(const SignedValue& a, const SignedValue& b) {
    return SignedValue(a.v_ + b.v_);
  }
  friend SignedValue operator-(const SignedValue& a, const SignedValue& b) {
    return SignedValue(a.v_ - b.v_);
  }
  friend SignedValue operator*(const SignedValue& a, const SignedValue& b) {
    return SignedValue(a.v_ * b.v_);
  }
  friend SignedValue operator-(const SignedValue& a) {
    return SignedValue(-a.v_);
  }

  friend bool operator==(const SignedValue& a, const SignedValue& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const SignedValue& a,
                                          const SignedValue& b) {
    int c = a.v_.compare(b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const SignedValue& v) {
    return os << v.v_;
  }

 private:
  BigInt v_;
};

/// ⌊a/b⌋ rounding toward negative infinity. Division by zero is an error
/// under signed semantics (the totalizing convention applies only to the
/// natural-valued term language).
inline SignedValue floor_div(const SignedValue& a, const SignedValue& b) {
  if (b.big().is_zero()) throw EvalError("signed division by zero");
  BigInt q = a.big() / b.big();
  if ((a.big() % b.big()) != 0 && (a.big() < 0) != (b.big() < 0)) --q;
  return SignedValue(q);
}

/// Euclidean remainder: the representative of a mod b in [0, |b|).
inline SignedValue euclid_mod(const SignedValue& a, const SignedValue& b) {
  if (b.big().is_zero()) throw EvalError("signed modulus by zero");
  BigInt r = a.big() % b.big();
  if (r < 0) r += boost::multiprecision::abs(b.big());
  return SignedValue(r);
}

/// max(a - b, 0), extending truncated subtraction over the integers.
inline SignedValue trunc_sub(const SignedValue& a, const SignedValue& b) {
  return a <= b ? SignedValue() : a - b;
}

/// base^exp for a non-negative machine-word exponent; 0^0 = 1.
inline SignedValue pow(const SignedValue& base, const SignedValue& exp) {
  if (exp.is_negative())
    throw EvalError("negative exponent " + exp.str() +
                    " under signed semantics");
  return SignedValue(detail::pow_u64(base.big(), exp.magnitude().to_uint64()));
}

}  // namespace arithterm
