#include <arithterm/parser.hpp>
#include <arithterm/term.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>
#include <thread>

#include "support/random_term.hpp"

using namespace arithterm;

TEST_CASE("evaluation follows the term-language conventions") {
  CHECK(eval(Term::pow(Term::constant(0), Term::constant(0))) == 1);
  CHECK(eval(Term::floor_div(Term::constant(5), Term::constant(0))) == 0);
  CHECK(eval(Term::mod(Term::constant(7), Term::constant(0))) == 7);
  CHECK(eval(Term::mod(Term::constant(7), Term::constant(1))) == 0);
  CHECK(eval(Term::trunc_sub(Term::constant(3), Term::constant(5))) == 0);
}

TEST_CASE("variables come from the environment") {
  auto t = Term::add(Term::var("m"), Term::var("n"));
  CHECK(eval(t, {{"m", Natural(3)}, {"n", Natural(4)}}) == 7);
  CHECK_THROWS_WITH(eval(t, {{"m", Natural(3)}}),
                    Catch::Matchers::ContainsSubstring("'n'"));
}

TEST_CASE("the multiplication term built from floored divisions") {
  // ⌊2^(m+n+4) / ⌊⌊2^(m+n+4)/(n+1)⌋/(m+1)⌋⌋ ∸ (m+n+1) equals m·n.
  auto t = parse(
      "2^(m+n+4) / (2^(m+n+4) / (n+1) / (m+1)) -. (m+n+1)");
  CHECK(eval(t, {{"m", Natural(3)}, {"n", Natural(5)}}) == 15);
  for (std::uint64_t m = 0; m <= 12; ++m)
    for (std::uint64_t n = 0; n <= 12; ++n) {
      Env env{{"m", Natural(m)}, {"n", Natural(n)}};
      CHECK(eval(t, env) == Natural(m * n));
    }
}

TEST_CASE("size and depth") {
  CHECK(term_size(Term::constant(5)) == 1);
  CHECK(term_depth(Term::constant(5)) == 1);
  auto t = Term::add(Term::var("m"), Term::var("n"));
  CHECK(term_size(t) == 3);
  CHECK(term_depth(t) == 2);
}

TEST_CASE("structural equality") {
  auto a = parse("2 + 3 * x");
  auto b = parse("2 + 3 * x");
  auto c = parse("2 + x * 3");
  CHECK(*a == *b);
  CHECK_FALSE(*a == *c);
}

TEST_CASE("substitution replaces bound variables only") {
  auto t = parse("n * k + n");
  auto s = substitute(t, {{"n", Natural(4)}});
  CHECK(to_string(s) == "4 * k + 4");
  CHECK(eval(s, {{"k", Natural(2)}}) == 12);
  // untouched trees are shared, not copied
  auto closed = parse("1 + 2");
  CHECK(substitute(closed, {{"n", Natural(1)}}) == closed);
}

TEST_CASE("totality: closed terms always evaluate") {
  std::mt19937_64 rng(101);
  testsupport::TermGenOptions opt;  // closed, eval-safe
  for (int i = 0; i < 400; ++i) {
    auto t = testsupport::random_term(rng, opt);
    CHECK_NOTHROW(eval(t));
  }
}

TEST_CASE("signed evaluation agrees with eval on lifted terms") {
  // agreement holds wherever both sides are defined; the signed dialect
  // rejects division by zero instead of totalizing it
  std::mt19937_64 rng(103);
  testsupport::TermGenOptions opt;
  opt.vars = {"m", "n"};
  int compared = 0;
  for (int i = 0; i < 600; ++i) {
    auto t = testsupport::random_term(rng, opt);
    Env env{{"m", Natural(rng() % 50)}, {"n", Natural(rng() % 50)}};
    SignedValue lifted;
    try {
      lifted = eval_signed(SignedExpr::lift(t), env);
    } catch (const EvalError&) {
      continue;  // a division by zero that eval would have totalized
    }
    ++compared;
    CHECK(lifted == SignedValue(eval(t, env)));
  }
  CHECK(compared >= 300);
}

TEST_CASE("one term can be evaluated from many threads") {
  auto t = parse("(2^n+1)^n / 2^(n*k) % 2^n");
  std::vector<std::thread> workers;
  std::array<Natural, 8> results;
  for (int w = 0; w < 8; ++w)
    workers.emplace_back([&, w] {
      Natural acc;
      for (std::uint64_t n = 1; n <= 24; ++n) {
        Env env{{"n", Natural(n)}, {"k", Natural(n / 2)}};
        acc += eval(t, env);
      }
      results[w] = acc;
    });
  for (auto& w : workers) w.join();
  for (int w = 1; w < 8; ++w) CHECK(results[w] == results[0]);
}

TEST_CASE("signed expressions reach negative intermediates") {
  using SE = SignedExpr;
  // ⌊(1 - 17^4) / ((2^4 - 1)·2^16)⌋ mod 2^4, the inner step of the signed
  // partial-sum formula at n = 4, j = 4
  auto seventeen_pow4 = SE::pow(SE::constant(17), SE::constant(4));
  auto num = SE::sub(SE::constant(1), seventeen_pow4);
  auto den = SE::mul(SE::constant(15), SE::pow(SE::constant(2), SE::constant(16)));
  auto e = SE::add(SE::constant(1),
                   SE::mod(SE::floor_div(num, den), SE::constant(16)));
  CHECK(eval_signed(e) == SignedValue(16));

  CHECK_THROWS_AS(
      eval_signed(SE::floor_div(SE::constant(1), SE::constant(0))), EvalError);
  CHECK_THROWS_AS(eval_signed(SE::var("q")), EvalError);
}
