#include <doctest.h>

#include <set>

#include "kummer/ff.hpp"

using namespace kummer;

TEST_CASE("prime field construction validates its invariants") {
  CHECK_NOTHROW(PrimeField(13, 3, 1));
  CHECK_NOTHROW(PrimeField(472393, 3, 10));
  CHECK_NOTHROW(PrimeField(41, 2, 3));
  CHECK_THROWS_AS(PrimeField(15, 3, 1), domain_error);   // q composite
  CHECK_THROWS_AS(PrimeField(13, 4, 1), domain_error);   // ell composite
  CHECK_THROWS_AS(PrimeField(13, 3, 2), domain_error);   // 9 does not divide 12
  CHECK_THROWS_AS(PrimeField(13, 3, 0), domain_error);
}

TEST_CASE("miller-rabin on 64-bit inputs") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(472393));
  CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(is_prime_u64((u64)472393 * 472393));
}

TEST_CASE("modpow") {
  PrimeField f13(13, 3, 1);
  CHECK(f13.pow(7, 0) == 1);
  PrimeField f19(19, 3, 2);
  CHECK(f19.pow(2, 18) == 1);

  // repeated multiplication oracle
  u64 byhand = 1;
  for (int i = 0; i < 6; ++i) byhand = f19.mul(byhand, 2);
  CHECK(byhand == 7);
  CHECK(f19.pow(2, 6) == byhand);
}

TEST_CASE("lpower_level against exhaustive power tables over F_19") {
  PrimeField f(19, 3, 2);
  std::set<u64> cubes, ninths;
  for (u64 x = 1; x < 19; ++x) {
    cubes.insert(f.pow(x, 3));
    ninths.insert(f.pow(x, 9));
  }
  for (u64 eps = 1; eps < 19; ++eps) {
    int w = f.lpower_level(eps);
    int expected = ninths.count(eps) ? 2 : cubes.count(eps) ? 1 : 0;
    CAPTURE(eps);
    CHECK(w == expected);
  }
  CHECK(f.lpower_level(7) == 1);  // 7 is a cube but not a ninth power
  CHECK_THROWS_AS(f.lpower_level(0), domain_error);
}

TEST_CASE("lpower_level trivialities and properties") {
  PrimeField f(41, 2, 3);
  CHECK(f.lpower_level(1) == 3);  // 1 is every power
  for (u64 x = 1; x < 41; ++x) {
    // an ell^j-th power has level at least j
    for (int j = 0; j <= 3; ++j) {
      u64 p = f.pow(x, f.ell_pow(j));
      CHECK(f.lpower_level(p) >= j);
    }
  }
}

TEST_CASE("alpha exponent") {
  PrimeField f19(19, 3, 2);
  CHECK(f19.alpha_exponent(1, 0) == 0);
  CHECK(f19.alpha_exponent(1, 2) == 0);

  // cross-check against the exhaustive tables
  std::set<u64> cubes, ninths;
  for (u64 x = 1; x < 19; ++x) {
    cubes.insert(f19.pow(x, 3));
    ninths.insert(f19.pow(x, 9));
  }
  for (u64 eps = 1; eps < 19; ++eps) {
    int w = ninths.count(eps) ? 2 : cubes.count(eps) ? 1 : 0;
    for (int d = 0; d <= 2; ++d) {
      int expected = std::max(0, 2 - w) - std::max(0, d - w);
      CHECK(f19.alpha_exponent(eps, d) == expected);
      CHECK(f19.alpha_exponent(eps, d) >= 0);
      CHECK(f19.alpha_exponent(eps, d) <= 2 - d);
    }
  }
  CHECK(f19.alpha_exponent(2, 0) == 2);  // 2 is not a cube mod 19

  CHECK_THROWS_AS(f19.alpha_exponent(2, 3), domain_error);
  CHECK_THROWS_AS(f19.alpha_exponent(2, -1), domain_error);
}

TEST_CASE("the 8-prime reference field: eps = -5") {
  PrimeField f(472393, 3, 10);
  u64 eps = f.mul(f.minus_one(), 5);
  CHECK(f.lpower_level(eps) == 0);  // -5 is not even a cube
  CHECK(f.alpha_exponent(eps, 8) == 2);
  CHECK(f.alpha_exponent(eps, 9) == 1);
  // -1 is a 3^10-th power, so the level of -5 equals the level of 5
  CHECK(f.lpower_level(5) == 0);
  CHECK(f.lpower_level(f.minus_one()) == 10);
}

TEST_CASE("field element helpers") {
  PrimeField f(13, 3, 1);
  CHECK(f.inv(5) == 8);  // 5*8 = 40 = 1 mod 13
  CHECK_THROWS_AS(f.inv(0), domain_error);
  CHECK(f.reduce(-1) == 12);
  CHECK(f.ell_pow(0) == 1);
  CHECK(f.ell_n() == 3);
}
