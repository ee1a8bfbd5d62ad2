#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "arithterm/error.hpp"
#include "arithterm/natural.hpp"
#include "arithterm/oracles.hpp"
#include "arithterm/polynomial.hpp"
#include "arithterm/term.hpp"

// Catalog of closed-form coefficient formulas. Each entry exists three ways:
// as a fast big-integer evaluator, as an actual arithmetic term whose
// evaluation must agree with it, and as a reference to a brute-force oracle.
// Parameter domains are enforced exactly as stated; outside them the
// identities genuinely fail, so evaluation is an error, never a guess.

namespace arithterm::formulas {

/// Named parameter values, e.g. {{"n", 4}, {"k", 2}}.
using Params = Env;

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

inline const Natural& arg(const Params& params, std::string_view name) {
  auto it = params.find(name);
  if (it == params.end())
    throw DomainError("missing parameter '" + std::string(name) + "'");
  return it->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Direct evaluators
// ---------------------------------------------------------------------------

/// Recovers [x^k] f(x) as ⌊f(c)/c^k⌋ mod c, valid whenever every
/// coefficient of index ≤ k is below c.
inline Natural digit_extract(const Polynomial& f, std::size_t k,
                             const Natural& c) {
  detail::require(!f.is_zero() && k <= f.degree(),
                  "digit_extract: index k = " + std::to_string(k) +
                      " is out of range for the polynomial");
  for (std::size_t i = 0; i <= k; ++i)
    detail::require(f.coeff(i) < c,
                    "digit_extract: coefficient " + f.coeff(i).str() +
                        " at index " + std::to_string(i) +
                        " is not below the base " + c.str());
  return f.eval_at(c) / pow(c, Natural(k)) % c;
}

/// C(n, k) = ⌊(2^n+1)^n / 2^(nk)⌋ mod 2^n.
inline Natural binomial(const Natural& n, const Natural& k) {
  detail::require(n >= 1,
                  "binomial: domain requires n >= 1 (got n = " + n.str() + ")");
  detail::require(k <= n, "binomial: domain requires 0 <= k <= n (got n = " +
                              n.str() + ", k = " + k.str() + ")");
  const Natural two(2);
  const Natural two_n = pow(two, n);
  return pow(two_n + 1, n) / pow(two, n * k) % two_n;
}

/// Σ_{i=0..j} C(n, i) = ⌊(2^n+1)^n / 2^(n(n−j))⌋ mod (2^n − 1),
/// for 0 ≤ j ≤ n − 2.
inline Natural partial_sum(const Natural& n, const Natural& j) {
  detail::require(
      n >= 2, "partial_sum: domain requires n >= 2 (got n = " + n.str() + ")");
  detail::require(j + 2 <= n,
                  "partial_sum: domain requires 0 <= j <= n - 2 (got n = " +
                      n.str() + ", j = " + j.str() + ")");
  const Natural two(2);
  const Natural two_n = pow(two, n);
  return pow(two_n + 1, n) / pow(two, n * (n - j)) % (two_n - 1);
}

/// Σ_{i=0..j} C(n, i) = 1 + (⌊(1 − (2^n+1)^n) / ((2^n−1)·2^(nj))⌋ mod 2^n)
/// for 1 ≤ j ≤ n, evaluated with signed semantics (floored division toward
/// −∞, Euclidean remainder). Covers j = n−1 and j = n, which partial_sum
/// excludes; the price is that the right-hand side is not an arithmetic term.
inline Natural partial_sum_boardman(const Natural& n, const Natural& j) {
  detail::require(n >= 1, "partial_sum_boardman: domain requires n >= 1 (got n = " +
                              n.str() + ")");
  detail::require(j >= 1 && j <= n,
                  "partial_sum_boardman: domain requires 1 <= j <= n (got n = " +
                      n.str() + ", j = " + j.str() + ")");
  const Natural two_n = pow(Natural(2), n);
  const SignedValue num = SignedValue(1) - SignedValue(pow(two_n + 1, n));
  const SignedValue den((two_n - 1) * pow(Natural(2), n * j));
  return (SignedValue(1) + euclid_mod(floor_div(num, den), SignedValue(two_n)))
      .to_natural();
}

/// Σ_v C(n, vs+j) = ⌊((2^n+1)^n mod (2^(ns)−1)) / 2^(nj)⌋ mod 2^n,
/// for n ≥ 1, s ≥ 2, 0 ≤ j < s and (s−1)n ≥ 2.
inline Natural multisection(const Natural& n, const Natural& s,
                            const Natural& j) {
  detail::require(n >= 1, "multisection: domain requires n >= 1 (got n = " +
                              n.str() + ")");
  detail::require(s >= 2, "multisection: domain requires s >= 2 (got s = " +
                              s.str() + ")");
  detail::require(j < s, "multisection: domain requires 0 <= j < s (got s = " +
                             s.str() + ", j = " + j.str() + ")");
  detail::require((s - 1) * n >= 2,
                  "multisection: domain requires (s - 1) * n >= 2 (got n = " +
                      n.str() + ", s = " + s.str() + ")");
  const Natural two(2);
  const Natural two_n = pow(two, n);
  const Natural reduced = pow(two_n + 1, n) % (pow(two, n * s) - 1);
  return reduced / pow(two, n * j) % two_n;
}

/// [x^k](1 + x + ... + x^(r−1))^n = ⌊(r^(rn)−1)^n / (r^(n+k)−r^k)^n⌋ mod r^n.
/// The base under the floor is the n-th power of the rational
/// (r^(rn)−1)/(r^(n+k)−r^k); raising numerator and denominator separately
/// leaves the floor unchanged and keeps every operand a natural.
inline Natural poly_coefficient(const Natural& n, const Natural& r,
                                const Natural& k) {
  detail::require(n >= 1, "poly_coefficient: domain requires n >= 1 (got n = " +
                              n.str() + ")");
  detail::require(r >= 2, "poly_coefficient: domain requires r >= 2 (got r = " +
                              r.str() + ")");
  detail::require(k <= n * (r - 1),
                  "poly_coefficient: domain requires 0 <= k <= n(r - 1) (got "
                  "n = " +
                      n.str() + ", r = " + r.str() + ", k = " + k.str() + ")");
  const Natural num = pow(r, r * n) - 1;
  const Natural den = pow(r, n + k) - pow(r, k);
  detail::require(!den.is_zero(),
                  "poly_coefficient: inner base r^(n+k) - r^k is zero");
  return pow(num, n) / pow(den, n) % pow(r, n);
}

/// Σ_{i=0..j} [x^i](1 + x + ... + x^(r−1))^n
///   = (((r^(rn)−1)/(r^n−1))^n mod r^(n(j+1))) mod (r^n − 1),
/// for 0 ≤ j ≤ n(r−1) − 2. The inner division is exact.
inline Natural poly_partial_sum(const Natural& n, const Natural& r,
                                const Natural& j) {
  detail::require(n >= 1, "poly_partial_sum: domain requires n >= 1 (got n = " +
                              n.str() + ")");
  detail::require(r >= 2, "poly_partial_sum: domain requires r >= 2 (got r = " +
                              r.str() + ")");
  detail::require(
      j + 2 <= n * (r - 1),
      "poly_partial_sum: domain requires 0 <= j <= n(r - 1) - 2 (got n = " +
          n.str() + ", r = " + r.str() + ", j = " + j.str() + ")");
  const Natural r_n = pow(r, n);
  const Natural num = pow(r, r * n) - 1;
  if (!(num % (r_n - 1)).is_zero())
    throw Error("poly_partial_sum: inner division is not exact");
  const Natural base = num / (r_n - 1);
  return pow(base, n) % pow(r, n * (j + 1)) % (r_n - 1);
}

/// Central trinomial coefficient [x^n](x^2+x+1)^n
///   = ⌊((27^n−1)/(9^n−3^n))^n⌋ mod 3^n,
/// the polynomial-coefficient formula at r = 3, k = n.
inline Natural central_trinomial(const Natural& n) {
  detail::require(n >= 1, "central_trinomial: domain requires n >= 1 (got n = " +
                              n.str() + ")");
  return poly_coefficient(n, 3, n);
}

// ---------------------------------------------------------------------------
// Arithmetic-term builders (leaves are constants or the declared parameters)
// ---------------------------------------------------------------------------

/// (2^n+1)^n / 2^(n*k) % 2^n, over variables n and k.
inline const TermPtr& binomial_term() {
  static const TermPtr t = [] {
    auto n = Term::var("n"), k = Term::var("k");
    auto c1 = Term::constant(1), c2 = Term::constant(2);
    auto two_n = pow(c2, n);
    return pow(two_n + c1, n) / pow(c2, n * k) % two_n;
  }();
  return t;
}

/// (2^n+1)^n / 2^(n*(n -. j)) % (2^n -. 1), over variables n and j.
inline const TermPtr& partial_sum_term() {
  static const TermPtr t = [] {
    auto n = Term::var("n"), j = Term::var("j");
    auto c1 = Term::constant(1), c2 = Term::constant(2);
    auto two_n = pow(c2, n);
    return pow(two_n + c1, n) / pow(c2, n * trunc_sub(n, j)) %
           trunc_sub(two_n, c1);
  }();
  return t;
}

/// ((2^n+1)^n % (2^(n*s) -. 1)) / 2^(n*j) % 2^n, over variables n, s, j.
inline const TermPtr& multisection_term() {
  static const TermPtr t = [] {
    auto n = Term::var("n"), s = Term::var("s"), j = Term::var("j");
    auto c1 = Term::constant(1), c2 = Term::constant(2);
    auto two_n = pow(c2, n);
    return pow(two_n + c1, n) % trunc_sub(pow(c2, n * s), c1) /
               pow(c2, n * j) %
           two_n;
  }();
  return t;
}

/// (r^(r*n) -. 1)^n / (r^(n+k) -. r^k)^n % r^n, over variables n, r, k.
inline const TermPtr& poly_coefficient_term() {
  static const TermPtr t = [] {
    auto n = Term::var("n"), r = Term::var("r"), k = Term::var("k");
    auto c1 = Term::constant(1);
    return pow(trunc_sub(pow(r, r * n), c1), n) /
               pow(trunc_sub(pow(r, n + k), pow(r, k)), n) %
           pow(r, n);
  }();
  return t;
}

/// ((r^(r*n) -. 1) / (r^n -. 1))^n % r^(n*(j+1)) % (r^n -. 1),
/// over variables n, r, j.
inline const TermPtr& poly_partial_sum_term() {
  static const TermPtr t = [] {
    auto n = Term::var("n"), r = Term::var("r"), j = Term::var("j");
    auto c1 = Term::constant(1);
    auto r_n_less_1 = trunc_sub(pow(r, n), c1);
    return pow(trunc_sub(pow(r, r * n), c1) / r_n_less_1, n) %
               pow(r, n * (j + c1)) %
           r_n_less_1;
  }();
  return t;
}

/// (27^n -. 1)^n / (9^n -. 3^n)^n % 3^n, over the variable n.
inline const TermPtr& central_trinomial_term() {
  static const TermPtr t = [] {
    auto n = Term::var("n");
    auto c1 = Term::constant(1);
    return pow(trunc_sub(pow(Term::constant(27), n), c1), n) /
               pow(trunc_sub(pow(Term::constant(9), n),
                             pow(Term::constant(3), n)),
                   n) %
           pow(Term::constant(3), n);
  }();
  return t;
}

/// 1 + (⌊(1 − (2^n+1)^n) / ((2^n−1)·2^(n*j))⌋ mod 2^n), over variables n
/// and j. True subtraction makes this a signed expression, not an
/// arithmetic term.
inline const SignedExprPtr& boardman_expr() {
  static const SignedExprPtr e = [] {
    using SE = SignedExpr;
    auto n = SE::var("n"), j = SE::var("j");
    auto c1 = SE::constant(1), c2 = SE::constant(2);
    auto two_n = SE::pow(c2, n);
    auto num = SE::sub(c1, SE::pow(SE::add(two_n, c1), n));
    auto den = SE::mul(SE::sub(two_n, c1), SE::pow(c2, SE::mul(n, j)));
    return SE::add(c1, SE::mod(SE::floor_div(num, den), two_n));
  }();
  return e;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct FormulaSpec {
  std::string name;
  std::vector<std::string> params;  // in declaration order
  std::string domain;               // human-readable parameter domain
  std::string summary;

  bool has_term = true;
  std::function<TermPtr()> term;  // unset when has_term is false
  /// Evaluates through the AST route: eval of the built term, or
  /// eval_signed of the signed expression for the one formula without a term.
  std::function<Natural(const Params&)> term_eval;
  /// Fast big-integer route; checks the domain.
  std::function<Natural(const Params&)> evaluate;
  /// Brute-force reference from the oracles module.
  std::function<Natural(const Params&)> oracle;
  /// Default verification grid; max_n = 0 means the entry's own default.
  std::function<std::vector<Params>(unsigned max_n)> grid;
};

namespace detail {

using arithterm::formulas::detail::arg;  // keep lambdas short

inline std::vector<FormulaSpec> make_catalog() {
  std::vector<FormulaSpec> cat;

  cat.push_back(FormulaSpec{
      "binomial",
      {"n", "k"},
      "n >= 1, 0 <= k <= n",
      "binomial coefficient C(n,k)",
      true,
      [] { return binomial_term(); },
      [](const Params& p) { return eval(binomial_term(), p); },
      [](const Params& p) { return binomial(arg(p, "n"), arg(p, "k")); },
      [](const Params& p) {
        return oracles::pascal_binomial(arg(p, "n"), arg(p, "k"));
      },
      [](unsigned max_n) {
        std::vector<Params> g;
        std::uint64_t top = max_n ? max_n : 40;
        for (std::uint64_t n = 1; n <= top; ++n)
          for (std::uint64_t k = 0; k <= n; ++k)
            g.push_back({{"n", Natural(n)}, {"k", Natural(k)}});
        return g;
      },
  });

  cat.push_back(FormulaSpec{
      "partial_sum",
      {"n", "j"},
      "n >= 2, 0 <= j <= n - 2",
      "partial sum C(n,0) + ... + C(n,j)",
      true,
      [] { return partial_sum_term(); },
      [](const Params& p) { return eval(partial_sum_term(), p); },
      [](const Params& p) { return partial_sum(arg(p, "n"), arg(p, "j")); },
      [](const Params& p) {
        return oracles::sum_binomial(arg(p, "n"), arg(p, "j"));
      },
      [](unsigned max_n) {
        std::vector<Params> g;
        std::uint64_t top = max_n ? max_n : 40;
        for (std::uint64_t n = 2; n <= top; ++n)
          for (std::uint64_t j = 0; j + 2 <= n; ++j)
            g.push_back({{"n", Natural(n)}, {"j", Natural(j)}});
        return g;
      },
  });

  cat.push_back(FormulaSpec{
      "partial_sum_boardman",
      {"n", "j"},
      "n >= 1, 1 <= j <= n",
      "partial sum C(n,0) + ... + C(n,j), signed variant covering j = n-1, n",
      false,
      {},
      [](const Params& p) {
        return eval_signed(boardman_expr(), p).to_natural();
      },
      [](const Params& p) {
        return partial_sum_boardman(arg(p, "n"), arg(p, "j"));
      },
      [](const Params& p) {
        return oracles::sum_binomial(arg(p, "n"), arg(p, "j"));
      },
      [](unsigned max_n) {
        std::vector<Params> g;
        std::uint64_t top = max_n ? max_n : 30;
        for (std::uint64_t n = 1; n <= top; ++n)
          for (std::uint64_t j = 1; j <= n; ++j)
            g.push_back({{"n", Natural(n)}, {"j", Natural(j)}});
        return g;
      },
  });

  cat.push_back(FormulaSpec{
      "multisection",
      {"n", "s", "j"},
      "n >= 1, s >= 2, 0 <= j < s, (s - 1) * n >= 2",
      "multisection sum C(n,j) + C(n,j+s) + C(n,j+2s) + ...",
      true,
      [] { return multisection_term(); },
      [](const Params& p) { return eval(multisection_term(), p); },
      [](const Params& p) {
        return multisection(arg(p, "n"), arg(p, "s"), arg(p, "j"));
      },
      [](const Params& p) {
        return oracles::multisection_sum(arg(p, "n"), arg(p, "s"),
                                         arg(p, "j"));
      },
      [](unsigned max_n) {
        std::vector<Params> g;
        std::uint64_t top = max_n ? max_n : 24;
        for (std::uint64_t n = 1; n <= top; ++n)
          for (std::uint64_t s = 2; s <= 6; ++s) {
            if ((s - 1) * n < 2) continue;
            for (std::uint64_t j = 0; j < s; ++j)
              g.push_back(
                  {{"n", Natural(n)}, {"s", Natural(s)}, {"j", Natural(j)}});
          }
        return g;
      },
  });

  cat.push_back(FormulaSpec{
      "poly_coefficient",
      {"n", "r", "k"},
      "n >= 1, r >= 2, 0 <= k <= n(r - 1)",
      "coefficient of x^k in (1 + x + ... + x^(r-1))^n",
      true,
      [] { return poly_coefficient_term(); },
      [](const Params& p) { return eval(poly_coefficient_term(), p); },
      [](const Params& p) {
        return poly_coefficient(arg(p, "n"), arg(p, "r"), arg(p, "k"));
      },
      [](const Params& p) {
        return oracles::poly_coefficient(arg(p, "n"), arg(p, "r"),
                                         arg(p, "k"));
      },
      [](unsigned max_n) {
        std::vector<Params> g;
        std::uint64_t top = max_n ? max_n : 12;
        for (std::uint64_t n = 1; n <= top; ++n)
          for (std::uint64_t r = 2; r <= 5; ++r)
            for (std::uint64_t k = 0; k <= n * (r - 1); ++k)
              g.push_back(
                  {{"n", Natural(n)}, {"r", Natural(r)}, {"k", Natural(k)}});
        return g;
      },
  });

  cat.push_back(FormulaSpec{
      "poly_partial_sum",
      {"n", "r", "j"},
      "n >= 1, r >= 2, 0 <= j <= n(r - 1) - 2",
      "partial sum of the coefficients of (1 + x + ... + x^(r-1))^n",
      true,
      [] { return poly_partial_sum_term(); },
      [](const Params& p) { return eval(poly_partial_sum_term(), p); },
      [](const Params& p) {
        return poly_partial_sum(arg(p, "n"), arg(p, "r"), arg(p, "j"));
      },
      [](const Params& p) {
        return oracles::poly_partial_sum(arg(p, "n"), arg(p, "r"),
                                         arg(p, "j"));
      },
      [](unsigned max_n) {
        std::vector<Params> g;
        std::uint64_t top = max_n ? max_n : 10;
        for (std::uint64_t n = 1; n <= top; ++n)
          for (std::uint64_t r = 2; r <= 5; ++r)
            for (std::uint64_t j = 0; j + 2 <= n * (r - 1); ++j)
              g.push_back(
                  {{"n", Natural(n)}, {"r", Natural(r)}, {"j", Natural(j)}});
        return g;
      },
  });

  cat.push_back(FormulaSpec{
      "central_trinomial",
      {"n"},
      "n >= 1",
      "central trinomial coefficient, [x^n](x^2 + x + 1)^n",
      true,
      [] { return central_trinomial_term(); },
      [](const Params& p) { return eval(central_trinomial_term(), p); },
      [](const Params& p) { return central_trinomial(arg(p, "n")); },
      [](const Params& p) { return oracles::central_trinomial(arg(p, "n")); },
      [](unsigned max_n) {
        std::vector<Params> g;
        std::uint64_t top = max_n ? max_n : 100;
        for (std::uint64_t n = 1; n <= top; ++n)
          g.push_back({{"n", Natural(n)}});
        return g;
      },
  });

  return cat;
}

}  // namespace detail

inline const std::vector<FormulaSpec>& catalog() {
  static const std::vector<FormulaSpec> cat = detail::make_catalog();
  return cat;
}

inline const FormulaSpec* find(std::string_view name) {
  for (const FormulaSpec& f : catalog())
    if (f.name == name) return &f;
  return nullptr;
}

inline const FormulaSpec& require_formula(std::string_view name) {
  const FormulaSpec* f = find(name);
  if (!f) throw DomainError("unknown formula '" + std::string(name) + "'");
  return *f;
}

/// The arithmetic term for the named formula with the given parameter values
/// substituted in. Throws NoTermError for partial_sum_boardman, which has no
/// arithmetic term, and DomainError for unknown names or out-of-domain
/// parameters.
inline TermPtr build_term(std::string_view name, const Params& params) {
  const FormulaSpec& f = require_formula(name);
  if (!f.has_term)
    throw NoTermError("'" + f.name + "' is not an arithmetic term");
  f.evaluate(params);  // reject out-of-domain parameters
  return substitute(f.term(), params);
}

}  // namespace arithterm::formulas
