#pragma once

#include <vector>

#include "arithterm/natural.hpp"
#include "arithterm/polynomial.hpp"

// Brute-force references for every closed-form formula in the catalog:
// additive Pascal recurrence and quadratic convolution, sharing no code
// with the formulas they check.

namespace arithterm::oracles {

/// C(n, k) by Pascal's rule alone; 0 for k > n.
inline Natural pascal_binomial(const Natural& n, const Natural& k) {
  if (k > n) return 0;
  std::uint64_t nn = n.to_uint64();
  std::uint64_t kk = k.to_uint64();
  std::vector<Natural> row(nn + 1);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= nn; ++i)
    for (std::uint64_t j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[kk];
}

/// C(n,0) + ... + C(n,j), summed term by term.
inline Natural sum_binomial(const Natural& n, const Natural& j) {
  Natural acc;
  Natural upper = j > n ? n : j;
  for (Natural k; k <= upper; k += 1) acc += pascal_binomial(n, k);
  return acc;
}

/// Σ_v C(n, v·s + j): the terms of row n along the arithmetic progression
/// with stride s starting at j. With s = 0 the upper bound ⌊(n−j)/0⌋ = 0
/// leaves the single term C(n, j).
inline Natural multisection_sum(const Natural& n, const Natural& s,
                                const Natural& j) {
  if (s.is_zero()) return pascal_binomial(n, j);
  Natural acc;
  for (Natural idx = j; idx <= n; idx += s) acc += pascal_binomial(n, idx);
  return acc;
}

/// (1 + x + ... + x^(r-1))^n by repeated convolution.
inline Polynomial expand_power(const Natural& r, const Natural& n) {
  Polynomial ones(std::vector<Natural>(r.to_uint64(), Natural(1)));
  Polynomial acc{1};
  std::uint64_t reps = n.to_uint64();
  for (std::uint64_t i = 0; i < reps; ++i)
    acc = schoolbook_multiply(acc, ones);
  return acc;
}

/// [x^k](1 + x + ... + x^(r-1))^n, read off the expansion.
inline Natural poly_coefficient(const Natural& n, const Natural& r,
                                const Natural& k) {
  return expand_power(r, n).coeff(k.to_uint64());
}

/// Σ_{i=0..j} [x^i](1 + x + ... + x^(r-1))^n.
inline Natural poly_partial_sum(const Natural& n, const Natural& r,
                                const Natural& j) {
  Polynomial f = expand_power(r, n);
  std::uint64_t stop = j.to_uint64();
  Natural acc;
  for (std::size_t i = 0; i < f.coefficient_count() && i <= stop; ++i)
    acc += f.coeffs()[i];
  return acc;
}

/// [x^n](x^2 + x + 1)^n.
inline Natural central_trinomial(const Natural& n) {
  return expand_power(3, n).coeff(n.to_uint64());
}

}  // namespace arithterm::oracles
