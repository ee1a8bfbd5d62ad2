#pragma once

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "arithterm/error.hpp"
#include "arithterm/natural.hpp"

namespace arithterm {

/// Dense polynomial with Natural coefficients, coeffs()[i] = [x^i] f(x).
/// Normalized: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Natural> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  Polynomial(std::initializer_list<Natural> coeffs) : coeffs_(coeffs) {
    normalize();
  }

  const std::vector<Natural>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t coefficient_count() const noexcept { return coeffs_.size(); }

  std::size_t degree() const {
    if (is_zero()) throw DomainError("the zero polynomial has no degree");
    return coeffs_.size() - 1;
  }

  /// [x^i] f(x); zero beyond the stored range.
  const Natural& coeff(std::size_t i) const {
    static const Natural zero;
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }

  /// Horner evaluation of f at x.
  Natural eval_at(const Natural& x) const {
    Natural acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Natural max_coeff() const {
    Natural m;
    for (const Natural& c : coeffs_)
      if (c > m) m = c;
    return m;
  }

  /// f(1), the sum of all coefficients.
  Natural coeff_sum() const {
    Natural s;
    for (const Natural& c : coeffs_) s += c;
    return s;
  }

  bool operator==(const Polynomial&) const = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Natural> coeffs_;
};

/// Quadratic schoolbook convolution; the reference against which the
/// Kronecker route is checked and benchmarked.
inline Polynomial schoolbook_multiply(const Polynomial& p,
                                      const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Natural> out(p.coefficient_count() + q.coefficient_count() - 1);
  for (std::size_t i = 0; i < p.coefficient_count(); ++i)
    for (std::size_t j = 0; j < q.coefficient_count(); ++j)
      out[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return Polynomial(std::move(out));
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coefficient_count(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i];
  }
  return os << ']';
}

}  // namespace arithterm
