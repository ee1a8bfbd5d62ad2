#include <arithterm/kronecker.hpp>
#include <arithterm/oracles.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace arithterm;
namespace k = arithterm::kron;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t max_len,
                       std::uint64_t coeff_bound) {
  std::size_t len = rng() % (max_len + 1);
  std::vector<Natural> cs(len);
  for (auto& c : cs) c = Natural(rng() % (coeff_bound + 1));
  return Polynomial(std::move(cs));
}

}  // namespace

TEST_CASE("packing is positional evaluation") {
  k::PackedPoly pp = k::pack(Polynomial{1, 4, 10}, 100);
  CHECK(pp.value == 100401);
  CHECK(pp.length == 3);
  CHECK(pp.base == 100);

  k::PackedPoly zero = k::pack(Polynomial{}, 7);
  CHECK(zero.value == 0);
  CHECK(zero.length == 0);
  CHECK(k::unpack(zero).is_zero());
}

TEST_CASE("pack rejects bad inputs") {
  CHECK_THROWS_AS(k::pack(Polynomial{1}, 1), DomainError);
  CHECK_THROWS_WITH(k::pack(Polynomial{1, 200, 3}, 100),
                    Catch::Matchers::ContainsSubstring("index 1"));
  CHECK_THROWS_AS(k::pack(Polynomial{100}, 100), DomainError);
}

TEST_CASE("unpacking reads base digits") {
  k::PackedPoly pp{Natural::from_decimal("16242520100401"), 100, 7};
  CHECK(k::unpack(pp) == Polynomial{1, 4, 10, 20, 25, 24, 16});

  k::PackedPoly zeros{Natural(0), 10, 3};
  CHECK(k::unpack(zeros) == Polynomial{});

  // power-of-two base exercises the shift path
  k::PackedPoly two{k::pack(Polynomial{3, 0, 9, 15}, 16)};
  CHECK(k::unpack(two) == Polynomial{3, 0, 9, 15});
}

TEST_CASE("pack/unpack roundtrip") {
  std::mt19937_64 rng(401);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = random_poly(rng, 24, 1u << 16);
    Natural base = p.max_coeff() + 1 + Natural(rng() % 100);
    if (base < 2) base = 2;
    k::PackedPoly pp = k::pack(p, base);
    CHECK(k::unpack(pp) == p);
  }
}

TEST_CASE("the coefficient-sum base f(1) recovers every coefficient") {
  std::mt19937_64 rng(409);
  int done = 0;
  while (done < 100) {
    Polynomial p = random_poly(rng, 16, 1000);
    std::size_t nonzero = 0;
    for (const auto& c : p.coeffs())
      if (!c.is_zero()) ++nonzero;
    if (nonzero < 2) continue;
    ++done;
    CHECK(k::unpack(k::pack(p, p.coeff_sum())) == p);
  }
}

TEST_CASE("multiplication through one big product") {
  CHECK(k::multiply(Polynomial{1, 1}, Polynomial{1, 1}) == Polynomial{1, 2, 1});
  CHECK(k::multiply(Polynomial{}, Polynomial{1, 2}) == Polynomial{});

  // (1 + x + x^2)^2 via repeated Kronecker products
  Polynomial ones{1, 1, 1};
  CHECK(k::multiply(ones, ones) == oracles::expand_power(3, 2));
  CHECK(k::multiply(ones, ones) == Polynomial{1, 2, 3, 2, 1});

  std::mt19937_64 rng(419);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = random_poly(rng, 32, 1u << 20);
    Polynomial q = random_poly(rng, 32, 1u << 20);
    CHECK(k::multiply(p, q) == schoolbook_multiply(p, q));
  }
}

TEST_CASE("the chosen base clears the convolution bound") {
  Polynomial p{7, 7, 7, 7};
  Polynomial q{7, 7};
  Natural base = k::choose_base(p, q);
  // bound = 7·7·2 = 98, next power of two above is 128
  CHECK(base == 128);
  Natural worst = p.max_coeff() * q.max_coeff() *
                  Natural(std::min(p.coefficient_count(),
                                   q.coefficient_count()));
  CHECK(worst < base);
}

TEST_CASE("benchmark report is well-formed and checks equality") {
  k::BenchReport r = k::bench_multiply(16, 12, 3, 99);
  CHECK(r.degree == 16);
  CHECK(r.coeff_bits == 12);
  CHECK(r.trials == 3);
  CHECK(r.products_equal);
  CHECK(r.naive_seconds >= 0.0);
  CHECK(r.kron_seconds >= 0.0);
  CHECK(r.base_bits > 0);
  CHECK(r.packed_bits > 0);

  k::BenchReport tiny = k::bench_multiply(1, 1, 1);
  CHECK(tiny.products_equal);
  CHECK_THROWS_AS(k::bench_multiply(0, 1, 1), DomainError);
}
