#include "doctest.h"
#include "oracles.hpp"
#include "wittcenter/random.hpp"
#include "wittcenter/ring.hpp"

using namespace wittcenter;

TEST_SUITE("ring") {

TEST_CASE("truncated arithmetic") {
  CHECK((ModInt(3, 2, 7) + ModInt(3, 2, 5)).value() == 3);
  CHECK((ModInt(2, 3, 5) * ModInt(2, 3, 3)).value() == 7);
  CHECK((-ModInt(5, 1, 0)).value() == 0);
  CHECK(ModInt(3, 2, -1).value() == 8);
  CHECK(ModInt(2, 4, BigInt("-100000000000000000000")).value() == 0);
  CHECK_THROWS_AS(ModInt(3, 2, 1) + ModInt(3, 3, 1), StructuralError);
  CHECK_THROWS_AS(ModInt(2, 1, 1) * ModInt(3, 1, 1), StructuralError);
}

TEST_CASE("construction rejects composite and oversized moduli") {
  CHECK_THROWS_AS(ModInt(4, 1, 0), RangeError);
  CHECK_THROWS_AS(ModInt(101, 1, 0), RangeError);
  CHECK_THROWS_AS(ModInt(2, 70, 0), RangeError);
  CHECK(is_small_prime(97));
  CHECK_FALSE(is_small_prime(91));
}

TEST_CASE("exact division by p^j") {
  const ModInt a = pdiv(ModInt(3, 3, 6), 1);
  CHECK(a.value() == 2);
  CHECK(a.exponent() == 2);
  const ModInt b = pdiv(ModInt(2, 3, 4), 2);
  CHECK(b.value() == 1);
  CHECK(b.exponent() == 1);
  CHECK_THROWS_AS(pdiv(ModInt(3, 2, 5), 1), DivisibilityError);
  CHECK_THROWS_AS(pdiv(ModInt(3, 2, 0), 3), RangeError);
}

TEST_CASE("reduction") {
  CHECK(reduce(ModInt(3, 3, 22), 1).value() == 1);
  CHECK(reduce(ModInt(2, 4, 13), 2).value() == 1);
  CHECK(reduce(ModInt(5, 2, 17), 2) == ModInt(5, 2, 17));
  CHECK_THROWS_AS(reduce(ModInt(5, 2, 17), 3), RangeError);
  CHECK_THROWS_AS(reduce(ModInt(5, 2, 17), 0), RangeError);
}

TEST_CASE("pdiv inverts multiplication by p^j") {
  Rng rng(11);
  for (unsigned p : {2U, 3U, 5U}) {
    for (unsigned k = 1; k <= 5; ++k) {
      const std::uint64_t q = checked_prime_power(p, k);
      for (int t = 0; t < 50; ++t) {
        const unsigned j = uniform(rng, 0, k);
        const std::uint64_t pj = checked_prime_power(p, j);
        const std::uint64_t v = std::uniform_int_distribution<std::uint64_t>(0, q - 1)(rng) / pj * pj % q;
        const ModInt a(p, k, static_cast<std::int64_t>(v));
        if (j == k) {
          CHECK(a.value() == 0);
          CHECK_THROWS_AS(pdiv(a, j), RangeError);
          continue;
        }
        const ModInt b = pdiv(a, j);
        CHECK(b.exponent() == k - j);
        CHECK((ModInt(p, k, static_cast<std::int64_t>(b.value())) *
               ModInt(p, k, static_cast<std::int64_t>(pj))) == a);
      }
    }
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  Rng rng(12);
  for (unsigned p : {2U, 3U, 7U}) {
    for (int t = 0; t < 100; ++t) {
      const unsigned k = uniform(rng, 2, 6);
      const unsigned k2 = uniform(rng, 1, k);
      const std::int64_t x = uniform(rng, 0, 100000), y = uniform(rng, 0, 100000);
      const ModInt a(p, k, x), b(p, k, y);
      CHECK(reduce(a * b, k2) == reduce(a, k2) * reduce(b, k2));
      CHECK(reduce(a + b, k2) == reduce(a, k2) + reduce(b, k2));
    }
  }
}

TEST_CASE("units and valuations") {
  const ModInt a(3, 3, 18);
  CHECK(a.valuation() == 2);
  CHECK_FALSE(a.is_unit());
  CHECK(ModInt(3, 3, 0).valuation() == 3);
  const ModInt u(5, 3, 7);
  CHECK((u * u.inverse()).value() == 1);
  CHECK_THROWS(a.inverse());
}

TEST_CASE("binomials") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(2, 1) == 2);
  CHECK(binomial(9, 4) == 126);
  CHECK(binomial(4, 9) == 0);
  const auto rows = oracle::pascal(64);
  for (unsigned n = 0; n <= 64; ++n) {
    for (unsigned k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == rows[n][k]);
  }
}

}
