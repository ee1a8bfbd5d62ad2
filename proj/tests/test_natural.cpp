#include <arithterm/natural.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

using namespace arithterm;

TEST_CASE("construction and printing") {
  CHECK(Natural().is_zero());
  CHECK(Natural(42).str() == "42");
  CHECK(Natural::from_decimal("000123").str() == "123");
  CHECK(Natural::from_decimal("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Natural(-1), DomainError);
  CHECK_THROWS_AS(Natural(BigInt(-5)), DomainError);
  CHECK_THROWS_AS(Natural::from_decimal(""), DomainError);
  CHECK_THROWS_AS(Natural::from_decimal("12a"), DomainError);
  CHECK_THROWS_AS(Natural::from_decimal("-3"), DomainError);

  std::ostringstream os;
  os << Natural(7);
  CHECK(os.str() == "7");
}

TEST_CASE("checked arithmetic") {
  Natural a(10), b(3);
  CHECK(a + b == 13);
  CHECK(a * b == 30);
  CHECK(a - b == 7);
  CHECK(a / b == 3);
  CHECK(a % b == 1);
  CHECK_THROWS_AS(b - a, DomainError);
  CHECK_THROWS_AS(a / Natural(0), DomainError);
  CHECK_THROWS_AS(a % Natural(0), DomainError);
}

TEST_CASE("conventions: trunc_sub, floor_div, mod, pow") {
  CHECK(trunc_sub(Natural(3), Natural(5)) == 0);
  CHECK(trunc_sub(Natural(5), Natural(3)) == 2);
  CHECK(floor_div(Natural(5), Natural(0)) == 0);
  CHECK(floor_div(Natural(5), Natural(2)) == 2);
  CHECK(mod(Natural(7), Natural(0)) == 7);
  CHECK(mod(Natural(7), Natural(1)) == 0);
  CHECK(mod(Natural(7), Natural(4)) == 3);
  CHECK(pow(Natural(0), Natural(0)) == 1);
  CHECK(pow(Natural(0), Natural(9)) == 0);
  CHECK(pow(Natural(2), Natural(10)) == 1024);
}

TEST_CASE("convention identities hold for random operands") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0, 1'000'000'000);
  for (int i = 0; i < 300; ++i) {
    Natural m(dist(rng)), x(dist(rng));
    CHECK(mod(m, Natural(0)) == m);
    CHECK(mod(m, Natural(1)) == 0);
    CHECK(floor_div(x, Natural(0)) == 0);
    Natural n(dist(rng));
    Natural ts = trunc_sub(m, n);
    CHECK(ts == (m >= n ? m - n : Natural(0)));
  }
}

TEST_CASE("mod/div consistency") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> dist(0, 1u << 20);
  for (int i = 0; i < 300; ++i) {
    Natural a(dist(rng)), b(dist(rng) + 1);
    CHECK(b * floor_div(a, b) + mod(a, b) == a);
    CHECK(mod(a, b) < b);
  }
}

TEST_CASE("no precision loss at catalog scale") {
  Natural n(100);
  Natural v = pow(pow(Natural(2), n) + 1, n);  // (2^100 + 1)^100
  CHECK(v.bit_length() == 10001);
  CHECK(mod(v, pow(Natural(2), n)) == 1);
}

TEST_CASE("pow rejects exponents beyond a machine word") {
  Natural huge = pow(Natural(2), Natural(70));
  CHECK_THROWS_AS(pow(Natural(2), huge), EvalError);
  CHECK_THROWS_AS(huge.to_uint64(), EvalError);
  CHECK(Natural(5).to_uint64() == 5);
}

TEST_CASE("signed values: sign and magnitude") {
  CHECK(SignedValue(0).sign() == 0);
  CHECK(SignedValue(-4).sign() == -1);
  CHECK(SignedValue(Natural(4)).sign() == 1);
  CHECK(SignedValue(-4).magnitude() == 4);
  CHECK_THROWS_AS(SignedValue(-4).to_natural(), DomainError);
  CHECK(SignedValue(4).to_natural() == 4);
}

TEST_CASE("signed floored division and Euclidean remainder") {
  CHECK(floor_div(SignedValue(-83520), SignedValue(983040)) == SignedValue(-1));
  CHECK(floor_div(SignedValue(7), SignedValue(2)) == SignedValue(3));
  CHECK(floor_div(SignedValue(-7), SignedValue(2)) == SignedValue(-4));
  CHECK(floor_div(SignedValue(7), SignedValue(-2)) == SignedValue(-4));
  CHECK(euclid_mod(SignedValue(-1), SignedValue(16)) == SignedValue(15));
  CHECK(euclid_mod(SignedValue(-7), SignedValue(3)) == SignedValue(2));
  CHECK(euclid_mod(SignedValue(7), SignedValue(-3)) == SignedValue(1));
  CHECK_THROWS_AS(floor_div(SignedValue(1), SignedValue(0)), EvalError);
  CHECK_THROWS_AS(euclid_mod(SignedValue(1), SignedValue(0)), EvalError);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 300; ++i) {
    SignedValue a(dist(rng));
    std::int64_t bv = dist(rng);
    if (bv == 0) bv = 1;
    SignedValue b(bv);
    SignedValue q = floor_div(a, b);
    // floored quotient: b*q <= a < b*(q+1) for b > 0, reversed for b < 0
    if (bv > 0) {
      CHECK(b * q <= a);
      CHECK(a < b * (q + SignedValue(1)));
    } else {
      CHECK(b * q >= a);
      CHECK(a > b * (q + SignedValue(1)));
    }
    SignedValue r = euclid_mod(a, b);
    CHECK(r.sign() >= 0);
    CHECK(r.magnitude() < b.magnitude());
    // a ≡ r (mod |b|)
    CHECK(euclid_mod(a - r, b) == SignedValue(0));
  }
}

TEST_CASE("signed pow") {
  CHECK(pow(SignedValue(-2), SignedValue(3)) == SignedValue(-8));
  CHECK(pow(SignedValue(-2), SignedValue(4)) == SignedValue(16));
  CHECK(pow(SignedValue(0), SignedValue(0)) == SignedValue(1));
  CHECK_THROWS_AS(pow(SignedValue(2), SignedValue(-1)), EvalError);
}

TEST_CASE("digit strings below the base stay below the next power") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> xdist(2, 1000);
  std::uniform_int_distribution<std::size_t> kdist(1, 12);
  for (int i = 0; i < 500; ++i) {
    Natural x(xdist(rng));
    std::size_t k = kdist(rng);
    Natural sum;
    Natural power(1);
    for (std::size_t idx = 0; idx < k; ++idx) {
      std::uniform_int_distribution<std::uint64_t> digit(
          0, x.to_uint64() - 1);
      sum += Natural(digit(rng)) * power;
      power *= x;
    }
    CHECK(sum < pow(x, Natural(k)));
  }
}
