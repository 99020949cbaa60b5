#include <doctest.h>

#include <random>

#include "cellab/scalars.hpp"

using namespace cellab;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("7/1").str() == "7");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int k = 0; k < 500; ++k) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("prime field basics") {
  Fp one = make_prime_field_one(7);
  Fp a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b).value() == (a * b.inverse()).value());
  CHECK((b * b.inverse()).value() == 1);
  CHECK_THROWS_AS(a / Fp(0, 7), std::domain_error);
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), std::invalid_argument);
  CHECK(one.modulus() == 7);
}

TEST_CASE("prime field construction rejects bad moduli") {
  CHECK_THROWS_AS(make_prime_field_one(6), std::invalid_argument);
  CHECK_THROWS_AS(make_prime_field_one(1), std::invalid_argument);
  CHECK_THROWS_AS(make_prime_field_one(1ull << 61), std::invalid_argument);
  CHECK(make_prime_field_one(2305843009213693951ull).modulus() == 2305843009213693951ull);  // 2^61 - 1
}

TEST_CASE("all GF(p) results lie in [0, p)") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2ull, 3ull, 101ull, 1000003ull}) {
    std::uniform_int_distribution<std::uint64_t> pick(0, 4 * p);
    for (int k = 0; k < 500; ++k) {
      Fp a(pick(rng), p), b(pick(rng), p);
      for (Fp r : {a + b, a - b, a * b, -a}) {
        CHECK(r.value() < p);
        CHECK(r.modulus() == p);
      }
      if (!b.is_zero()) CHECK((a / b).value() < p);
    }
  }
}

TEST_CASE("rational to GF(p) embedding") {
  Fp one = make_prime_field_one(7);
  CHECK(scalar_from_rational(one, Rational(1, 2)).value() == 4);  // 2*4 = 8 = 1 mod 7
  CHECK(scalar_from_rational(one, Rational(-1)).value() == 6);
  CHECK_THROWS_AS(scalar_from_rational(one, Rational(1, 7)), std::domain_error);
}

TEST_CASE("miller-rabin matches small primes") {
  std::vector<bool> sieve(2000, true);
  sieve[0] = sieve[1] = false;
  for (int i = 2; i < 2000; ++i)
    if (sieve[i])
      for (int j = 2 * i; j < 2000; j += i) sieve[j] = false;
  for (int i = 0; i < 2000; ++i) CHECK(is_prime_u64(i) == sieve[i]);
}
