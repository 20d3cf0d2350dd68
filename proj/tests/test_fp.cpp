#include <doctest.h>

#include "oracles.hpp"
#include "thinlie/fp.hpp"

using namespace thinlie;

TEST_CASE("field arithmetic") {
  const PrimeField f3(3), f5(5), f7(7);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f5.inv(2) == 3);
  CHECK(f7.neg(0) == 0);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f5.reduce(-1) == 4);
  CHECK(f7.pow(3, 6) == 1);
  for (Residue a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
  CHECK_THROWS_WITH_AS(f5.inv(0), "division by zero in F_p", FieldError);
}

TEST_CASE("moduli") {
  CHECK_THROWS_AS(PrimeField(2), FieldError);
  CHECK_THROWS_AS(PrimeField(9), FieldError);
  CHECK_THROWS_AS(PrimeField(65537), FieldError);
  CHECK_NOTHROW(PrimeField(65521));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("scalars") {
  const PrimeField f(5);
  const Scalar a(f, 3), b(f, 4);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a / b * b) == a);
  CHECK((-a).value() == 2);
  CHECK_THROWS_AS(a + Scalar(PrimeField(7), 1), FieldError);
  CHECK_THROWS_AS(a / Scalar(f, 0), FieldError);
}

TEST_CASE("lucas binomial, hand examples") {
  const PrimeField f3(3);
  CHECK(lucas_binomial(7, 2, f3) == 0);
  CHECK(lucas_binomial(3, 1, f3) == 0);
  CHECK(lucas_binomial(5, 7, f3) == 0);
  for (std::uint64_t a = 0; a < 50; ++a) CHECK(lucas_binomial(a, 0, PrimeField(7)) == 1);
}

TEST_CASE("lucas binomial agrees with Pascal's triangle mod p") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField f(p);
    const auto t = oracle::pascal_mod(600, p);
    for (int a = 0; a < 600; ++a)
      for (int b = 0; b <= a; ++b) REQUIRE(lucas_binomial(a, b, f) == t[a][b]);
  }
}

TEST_CASE("lucas binomial identities") {
  const PrimeField f(5);
  for (std::uint64_t a = 0; a < 200; ++a)
    for (std::uint64_t b = 0; b <= a; ++b) REQUIRE(lucas_binomial(a, b, f) == lucas_binomial(a, a - b, f));
  // C(p^n - 1, k) = (-1)^k
  const std::uint64_t m = int_pow(5, 3) - 1;
  for (std::uint64_t k = 0; k <= m; ++k) REQUIRE(lucas_binomial(m, k, f) == (k % 2 ? 4u : 1u));
  CHECK(lucas_binomial_scalar(6, 1, f).value() == 1);
}

TEST_CASE("int_pow") {
  CHECK(int_pow(3, 4) == 81);
  CHECK(int_pow(7, 0) == 1);
  CHECK_THROWS(int_pow(3, 40));
}
