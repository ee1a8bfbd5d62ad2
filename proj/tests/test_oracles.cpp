#include <arithterm/oracles.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace arithterm;
namespace o = arithterm::oracles;

TEST_CASE("Pascal binomials") {
  CHECK(o::pascal_binomial(4, 2) == 6);
  CHECK(o::pascal_binomial(0, 0) == 1);
  CHECK(o::pascal_binomial(5, 7) == 0);
  for (std::uint64_t n = 0; n <= 12; ++n) CHECK(o::pascal_binomial(n, 0) == 1);
  CHECK(o::pascal_binomial(40, 20).str() == "137846528820");
}

TEST_CASE("binomial partial sums") {
  CHECK(o::sum_binomial(5, 2) == 16);  // 1 + 5 + 10
  CHECK(o::sum_binomial(5, 9) == 32);  // clipped at the row end
  for (std::uint64_t n = 0; n <= 20; ++n)
    CHECK(o::sum_binomial(n, n) == pow(Natural(2), Natural(n)));
}

TEST_CASE("multisection sums") {
  CHECK(o::multisection_sum(4, 2, 0) == 8);  // 1 + 6 + 1
  CHECK(o::multisection_sum(4, 2, 1) == 8);  // 4 + 4
  CHECK(o::multisection_sum(4, 5, 4) == 1);  // single term C(4,4)
  CHECK(o::multisection_sum(4, 3, 7) == 0);  // progression starts past the row
  CHECK(o::multisection_sum(6, 0, 2) == 15);  // stride 0 keeps one term
}

TEST_CASE("power expansion") {
  CHECK(o::expand_power(3, 2) == Polynomial{1, 2, 3, 2, 1});
  CHECK(o::expand_power(2, 4) == Polynomial{1, 4, 6, 4, 1});
  CHECK(o::expand_power(5, 0) == Polynomial{1});
  CHECK(o::expand_power(1, 9) == Polynomial{1});
}

TEST_CASE("expansion invariants") {
  for (std::uint64_t r = 1; r <= 5; ++r)
    for (std::uint64_t n = 0; n <= 8; ++n) {
      Polynomial f = o::expand_power(r, n);
      // coefficient sum is r^n
      CHECK(f.coeff_sum() == pow(Natural(r), Natural(n)));
      // palindromic coefficients
      std::size_t count = f.coefficient_count();
      for (std::size_t i = 0; i < count; ++i)
        CHECK(f.coeffs()[i] == f.coeffs()[count - 1 - i]);
    }
  // binary case reproduces Pascal rows
  for (std::uint64_t n = 0; n <= 16; ++n) {
    Polynomial f = o::expand_power(2, n);
    for (std::uint64_t k = 0; k <= n; ++k)
      CHECK(f.coeff(k) == o::pascal_binomial(n, k));
  }
}

TEST_CASE("coefficient reads and sums") {
  CHECK(o::poly_coefficient(2, 3, 2) == 3);
  CHECK(o::poly_coefficient(2, 3, 9) == 0);  // past the degree
  CHECK(o::poly_partial_sum(2, 3, 1) == 3);
  CHECK(o::poly_partial_sum(2, 3, 100) == 9);  // clipped to the full sum
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (std::uint64_t r = 2; r <= 5; ++r)
      CHECK(o::poly_coefficient(n, r, 0) == 1);
}

TEST_CASE("central trinomial values") {
  const std::uint64_t expected[] = {1, 3, 7, 19, 51, 141};
  for (std::uint64_t n = 1; n <= 6; ++n)
    CHECK(o::central_trinomial(n) == expected[n - 1]);
}

TEST_CASE("zero polynomial behaves") {
  Polynomial z;
  CHECK(z.is_zero());
  CHECK(z.coeff(3) == 0);
  CHECK(z.eval_at(100) == 0);
  CHECK_THROWS_AS(z.degree(), DomainError);
  CHECK(Polynomial{0, 0, 0} == z);
  CHECK(schoolbook_multiply(z, Polynomial{1, 2}) == z);
}
