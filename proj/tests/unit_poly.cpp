#include <doctest.h>

#include <random>

#include "kummer/poly.hpp"
#include "kummer/random_instance.hpp"

using namespace kummer;

namespace {

Poly from_roots(u64 q, std::initializer_list<u64> roots) {
  Poly p = Poly::constant(q, 1);
  for (u64 r : roots) p = mul(p, Poly(q, {(q - r % q) % q, 1}));  // (T - r)
  return p;
}

}  // namespace

TEST_CASE("divrem") {
  // (T^2 + 1) / T over F_5
  Poly num(5, {1, 0, 1}), den = Poly::t(5);
  auto [quo, remd] = divrem(num, den);
  CHECK(quo == Poly::t(5));
  CHECK(remd == Poly::constant(5, 1));
  CHECK_THROWS_AS(divrem(num, Poly::zero(5)), domain_error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_monic(rng, 13, static_cast<i64>(rng() % 9));
    Poly b = random_monic(rng, 13, 1 + static_cast<i64>(rng() % 5));
    auto [c, r] = divrem(a, b);
    CHECK(add(mul(c, b), r) == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd") {
  Poly p(5, {3, 1, 2});
  CHECK(gcd(p, Poly::zero(5)) == monic(p));
  CHECK(gcd(Poly::zero(5), Poly::zero(5)) == Poly::zero(5));

  // gcd((T+1)(T+2), (T+1)(T+3)) = T+1 over F_5
  Poly a = from_roots(5, {4, 3});  // (T+1)(T+2) has roots -1 = 4, -2 = 3
  Poly b = from_roots(5, {4, 2});
  CHECK(a == Poly(5, {2, 3, 1}));
  CHECK(gcd(a, b) == Poly(5, {1, 1}));
}

TEST_CASE("is_irreducible with root-search oracle") {
  CHECK(is_irreducible(Poly::t(13)));
  CHECK_THROWS_AS(is_irreducible(Poly::constant(13, 2)), domain_error);

  auto has_root = [](const Poly& p) {
    for (u64 x = 0; x < p.q(); ++x)
      if (eval(p, x) == 0) return true;
    return false;
  };
  Poly p13(13, {1, 0, 1}), p19(19, {1, 0, 1});
  CHECK(has_root(p13));  // -1 is a square mod 13
  CHECK_FALSE(is_irreducible(p13));
  CHECK_FALSE(has_root(p19));
  CHECK(is_irreducible(p19));

  // degree <= 3: irreducible iff no root; sweep everything monic of degree 2 over F_13
  for (u64 c0 = 0; c0 < 13; ++c0)
    for (u64 c1 = 0; c1 < 13; ++c1) {
      Poly p(13, {c0, c1, 1});
      CHECK(is_irreducible(p) == !has_root(p));
    }
}

TEST_CASE("factor basics") {
  Factorization c = factor(Poly::constant(5, 3));
  CHECK(c.unit == 3);
  CHECK(c.factors.empty());
  CHECK_THROWS_AS(factor(Poly::zero(5)), domain_error);

  // 3 (T+1)^2 (T+2) over F_5
  Poly p = mul_scalar(mul(mul(Poly(5, {1, 1}), Poly(5, {1, 1})), Poly(5, {2, 1})), 3);
  Factorization f = factor(p);
  CHECK(f.unit == 3);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == Poly(5, {1, 1}));
  CHECK(f.factors[0].second == 2);
  CHECK(f.factors[1].first == Poly(5, {2, 1}));
  CHECK(f.factors[1].second == 1);
}

TEST_CASE("factor handles p-th powers (derivative-zero path)") {
  Poly base(5, {2, 1});
  Poly p = Poly::constant(5, 1);
  for (int i = 0; i < 5; ++i) p = mul(p, base);
  Factorization f = factor(p);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == base);
  CHECK(f.factors[0].second == 5);
}

TEST_CASE("factor round-trips on random monic products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const u64 q = trial % 2 ? 13 : 19;
    Poly p = Poly::constant(q, 1 + rng() % (q - 1));
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) p = mul(p, random_monic(rng, q, 1 + static_cast<i64>(rng() % 4)));
    Factorization f = factor(p, rng);
    Poly back = Poly::constant(q, f.unit);
    for (const auto& [fac, mult] : f.factors) {
      CHECK(fac.is_monic());
      CHECK(mult >= 1);
      for (int i = 0; i < mult; ++i) back = mul(back, fac);
    }
    CHECK(back == p);
  }
}

TEST_CASE("is_irreducible agrees with factor") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    Poly p = random_monic(rng, 13, 1 + static_cast<i64>(rng() % 8));
    Factorization f = factor(p, rng);
    bool irr = f.factors.size() == 1 && f.factors[0].second == 1;
    CHECK(is_irreducible(p) == irr);
  }
}

TEST_CASE("coefficient text format") {
  Poly p = poly_from_coeff_string(13, "1,0,1");
  CHECK(p == Poly(13, {1, 0, 1}));
  CHECK(to_coeff_string(p) == "1,0,1");
  CHECK(poly_from_coeff_string(13, "-1,1") == Poly(13, {12, 1}));
  CHECK(to_coeff_string(Poly::zero(13)) == "0");
  CHECK_THROWS_AS(poly_from_coeff_string(13, "1,x"), domain_error);
  CHECK_THROWS_AS(poly_from_coeff_string(13, ""), domain_error);
}
