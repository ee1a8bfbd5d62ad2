#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arithterm/error.hpp"
#include "arithterm/natural.hpp"
#include "arithterm/polynomial.hpp"

// Kronecker substitution: a polynomial with coefficients below d is encoded
// as the single integer f(d), whose base-d digits are the coefficients.
// Multiplying two encoded polynomials is then one big-integer
// multiplication followed by digit extraction.

namespace arithterm::kron {

/// A polynomial packed as value = f(base). The value alone cannot recover
/// trailing zero coefficients, so the coefficient count travels along.
struct PackedPoly {
  Natural value;
  Natural base;
  std::size_t length = 0;
};

namespace detail {

inline bool is_power_of_two(const BigInt& b) {
  return BigInt(b & (b - 1)).is_zero();
}

// Balanced join/split for power-of-two bases. Halving at every level keeps
// the shifted operands small, so the whole digit string is assembled or
// taken apart in O(total bits · log length) instead of the quadratic cost
// of walking it digit by digit.
inline BigInt join_digits(const std::vector<Natural>& cs, std::size_t lo,
                          std::size_t count, unsigned bits) {
  if (count == 1) return cs[lo].big();
  std::size_t half = count / 2;
  return join_digits(cs, lo, half, bits) |
         (join_digits(cs, lo + half, count - half, bits) << (bits * half));
}

inline void split_digits(const BigInt& v, std::size_t lo, std::size_t count,
                         unsigned bits, std::vector<Natural>& out) {
  if (count == 1) {
    out[lo] = Natural(v);
    return;
  }
  std::size_t half = count / 2;
  BigInt mask = (BigInt(1) << (bits * half)) - 1;
  split_digits(BigInt(v & mask), lo, half, bits, out);
  split_digits(BigInt(v >> (bits * half)), lo + half, count - half, bits, out);
}

}  // namespace detail

/// Encodes p at the given base; every coefficient must be below it.
inline PackedPoly pack(const Polynomial& p, const Natural& base) {
  if (base < 2)
    throw DomainError("pack: base must be at least 2 (got " + base.str() +
                      ")");
  const auto& cs = p.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!(cs[i] < base))
      throw DomainError("pack: coefficient " + cs[i].str() + " at index " +
                        std::to_string(i) + " is not below the base " +
                        base.str());
  if (cs.empty()) return PackedPoly{Natural(), base, 0};
  if (detail::is_power_of_two(base.big())) {
    unsigned bits = boost::multiprecision::msb(base.big());
    return PackedPoly{
        Natural(detail::join_digits(cs, 0, cs.size(), bits)), base,
        cs.size()};
  }
  Natural value;
  for (std::size_t i = cs.size(); i-- > 0;) value = value * base + cs[i];
  return PackedPoly{value, base, cs.size()};
}

/// Decodes coefficient k as ⌊value/base^k⌋ mod base for every k < length.
inline Polynomial unpack(const PackedPoly& pp) {
  std::vector<Natural> cs(pp.length);
  if (pp.length == 0) return Polynomial();
  const BigInt& b = pp.base.big();
  if (detail::is_power_of_two(b)) {
    unsigned bits = boost::multiprecision::msb(b);
    detail::split_digits(pp.value.big(), 0, pp.length, bits, cs);
  } else {
    BigInt cur = pp.value.big();
    for (std::size_t k = 0; k < pp.length; ++k) {
      cs[k] = Natural(cur % b);
      cur /= b;
    }
  }
  return Polynomial(std::move(cs));
}

/// The packing base used by multiply: the smallest power of two strictly
/// above max(p)·max(q)·min(#p, #q), which bounds every coefficient of the
/// product, so the digits of the product value never run together.
inline Natural choose_base(const Polynomial& p, const Polynomial& q) {
  Natural bound =
      p.max_coeff() * q.max_coeff() *
      Natural(std::min(p.coefficient_count(), q.coefficient_count()));
  return Natural(BigInt(1) << bound.bit_length());
}

/// Polynomial product through a single big-integer multiplication.
inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  const Natural base = choose_base(p, q);
  PackedPoly a = pack(p, base);
  PackedPoly b = pack(q, base);
  return unpack(PackedPoly{a.value * b.value, base,
                           p.coefficient_count() + q.coefficient_count() - 1});
}

struct BenchReport {
  std::size_t degree = 0;
  unsigned coeff_bits = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t base_bits = 0;    // bits per packed digit
  std::size_t packed_bits = 0;  // largest packed operand seen
  double naive_seconds = 0.0;
  double kron_seconds = 0.0;
  bool products_equal = true;
};

/// Uniform random polynomial of exactly the given degree with coefficients
/// below 2^coeff_bits.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t degree,
                                    unsigned coeff_bits) {
  auto draw = [&rng, coeff_bits] {
    BigInt v;
    unsigned remaining = coeff_bits;
    while (remaining > 0) {
      unsigned take = remaining < 64 ? remaining : 64;
      v = (v << take) | BigInt(rng() >> (64 - take));
      remaining -= take;
    }
    return Natural(std::move(v));
  };
  std::vector<Natural> cs(degree + 1);
  for (Natural& c : cs) c = draw();
  if (cs.back().is_zero()) cs.back() = 1;
  return Polynomial(std::move(cs));
}

/// Times schoolbook convolution against the Kronecker route on identical
/// random inputs, checking on every trial that the products agree. Trials
/// run sequentially on one thread so the timings are comparable.
inline BenchReport bench_multiply(std::size_t degree, unsigned coeff_bits,
                                  std::size_t trials, std::uint64_t seed = 1) {
  if (degree == 0 || coeff_bits == 0 || trials == 0)
    throw DomainError("bench_multiply: degree, bits and trials must be positive");
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  BenchReport report;
  report.degree = degree;
  report.coeff_bits = coeff_bits;
  report.trials = trials;
  report.seed = seed;

  for (std::size_t t = 0; t < trials; ++t) {
    Polynomial p = random_polynomial(rng, degree, coeff_bits);
    Polynomial q = random_polynomial(rng, degree, coeff_bits);

    auto t0 = clock::now();
    Polynomial by_convolution = schoolbook_multiply(p, q);
    auto t1 = clock::now();
    Polynomial by_kronecker = multiply(p, q);
    auto t2 = clock::now();

    report.naive_seconds += std::chrono::duration<double>(t1 - t0).count();
    report.kron_seconds += std::chrono::duration<double>(t2 - t1).count();
    if (!(by_convolution == by_kronecker)) report.products_equal = false;

    const Natural base = choose_base(p, q);
    report.base_bits = std::max(report.base_bits, base.bit_length() - 1);
    report.packed_bits =
        std::max({report.packed_bits, pack(p, base).value.bit_length(),
                  pack(q, base).value.bit_length()});
  }
  return report;
}

}  // namespace arithterm::kron
