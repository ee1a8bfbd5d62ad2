#pragma once

#include <arithterm/term.hpp>

#include <random>
#include <string>
#include <vector>

// Random term generation for property tests.

namespace testsupport {

struct TermGenOptions {
  unsigned max_depth = 6;
  std::uint64_t max_const = 9;
  std::vector<std::string> vars;  // empty generates closed terms
  // Keep exponents small constants so evaluation stays cheap; turn off for
  // syntax-only tests (roundtripping never evaluates).
  bool eval_safe = true;
};

inline arithterm::TermPtr random_term(std::mt19937_64& rng,
                                      const TermGenOptions& opt,
                                      unsigned depth = 0) {
  using arithterm::Natural;
  using arithterm::Term;

  auto leaf = [&] {
    if (!opt.vars.empty() && rng() % 2 == 0)
      return Term::var(opt.vars[rng() % opt.vars.size()]);
    return Term::constant(Natural(rng() % (opt.max_const + 1)));
  };

  if (depth >= opt.max_depth || rng() % 3 == 0) return leaf();

  switch (rng() % 6) {
    case 0:
      return Term::add(random_term(rng, opt, depth + 1),
                       random_term(rng, opt, depth + 1));
    case 1:
      return Term::trunc_sub(random_term(rng, opt, depth + 1),
                             random_term(rng, opt, depth + 1));
    case 2:
      return Term::mul(random_term(rng, opt, depth + 1),
                       random_term(rng, opt, depth + 1));
    case 3:
      return Term::floor_div(random_term(rng, opt, depth + 1),
                             random_term(rng, opt, depth + 1));
    case 4:
      return Term::mod(random_term(rng, opt, depth + 1),
                       random_term(rng, opt, depth + 1));
    default: {
      auto exponent = opt.eval_safe
                          ? Term::constant(Natural(rng() % 7))
                          : random_term(rng, opt, depth + 1);
      return Term::pow(random_term(rng, opt, depth + 1), std::move(exponent));
    }
  }
}

}  // namespace testsupport
