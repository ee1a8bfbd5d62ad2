#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arithterm/formulas.hpp"
#include "arithterm/oracles.hpp"

// Grid verification: every catalog entry is evaluated over its parameter
// grid through both routes (big-integer and term AST) and compared against
// its brute-force oracle.

namespace arithterm::verify {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few mismatch descriptions

  bool ok() const noexcept { return failures == 0; }

  void fail(std::string msg) {
    ++failures;
    if (samples.size() < 4) samples.push_back(std::move(msg));
  }
};

inline std::string describe(const formulas::Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ", ";
    out += name + " = " + value.str();
  }
  return out;
}

inline SuiteResult check_formula(const formulas::FormulaSpec& f,
                                 unsigned max_n = 0) {
  SuiteResult res;
  res.name = f.name;
  for (const formulas::Params& params : f.grid(max_n)) {
    ++res.cases;
    try {
      Natural direct = f.evaluate(params);
      Natural reference = f.oracle(params);
      if (direct != reference) {
        res.fail(describe(params) + ": formula gives " + direct.str() +
                 ", oracle gives " + reference.str());
        continue;
      }
      Natural via_ast = f.term_eval(params);
      if (via_ast != direct)
        res.fail(describe(params) + ": term evaluates to " + via_ast.str() +
                 ", expected " + direct.str());
    } catch (const Error& e) {
      res.fail(describe(params) + ": " + e.what());
    }
  }
  return res;
}

/// The digit-extraction suite: a fixed worked example plus extraction of
/// every coefficient of (1 + x + ... + x^(r-1))^n at base r^n = f(1).
inline SuiteResult check_digit_extract() {
  SuiteResult res;
  res.name = "digit_extract";

  Polynomial f{1, 4, 10, 20, 25, 24, 16};
  const Natural expected_value = Natural::from_decimal("16242520100401");
  ++res.cases;
  if (f.eval_at(100) != expected_value)
    res.fail("f(100) = " + f.eval_at(100).str() + ", expected " +
             expected_value.str());
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    ++res.cases;
    Natural got = formulas::digit_extract(f, k, 100);
    if (got != f.coeff(k))
      res.fail("k = " + std::to_string(k) + ": extracted " + got.str() +
               ", expected " + f.coeff(k).str());
  }

  for (std::uint64_t r = 2; r <= 5; ++r)
    for (std::uint64_t n = 1; n <= 8; ++n) {
      Polynomial g = oracles::expand_power(r, n);
      Natural base = g.coeff_sum();  // r^n, the f(1) choice
      for (std::size_t k = 0; k <= g.degree(); ++k) {
        ++res.cases;
        try {
          Natural got = formulas::digit_extract(g, k, base);
          if (got != g.coeff(k))
            res.fail("r = " + std::to_string(r) + ", n = " + std::to_string(n) +
                     ", k = " + std::to_string(k) + ": extracted " +
                     got.str() + ", expected " + g.coeff(k).str());
        } catch (const Error& e) {
          res.fail(std::string("unexpected error: ") + e.what());
        }
      }
    }
  return res;
}

inline SuiteResult check_one(std::string_view name, unsigned max_n = 0) {
  if (name == "digit_extract") return check_digit_extract();
  return check_formula(formulas::require_formula(name), max_n);
}

inline std::vector<SuiteResult> check_all(unsigned max_n = 0) {
  std::vector<SuiteResult> all;
  all.push_back(check_digit_extract());
  for (const formulas::FormulaSpec& f : formulas::catalog())
    all.push_back(check_formula(f, max_n));
  return all;
}

}  // namespace arithterm::verify
