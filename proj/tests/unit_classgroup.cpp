#include <doctest.h>

#include <random>
#include <set>

#include "kummer/classgroup.hpp"
#include "kummer/checks.hpp"

using namespace kummer;

namespace {

KummerClass cls(const PrimeField& f, std::vector<u64> vec, u64 konst = 1) {
  KummerClass c;
  c.vec = std::move(vec);
  for (auto& x : c.vec) x %= f.ell_n();
  c.konst = konst;
  return c;
}

std::vector<PrimeLabel> labels_of(std::initializer_list<i64> degs) {
  std::vector<PrimeLabel> out;
  int idx = 1;
  for (i64 d : degs) out.push_back(PrimeLabel{idx++, d, std::nullopt});
  return out;
}

}  // namespace

TEST_CASE("to_class scales to the common root order") {
  PrimeField f(472393, 3, 10);
  RadicalField g;
  g.root_exp = 7;  // scale by 3^3
  g.const_part = 1;
  g.exps = {2, 0};
  KummerClass c = to_class(f, g);
  CHECK(c.vec[0] == 2 * 27);
  CHECK(c.vec[1] == 0);
  CHECK(c.konst == 1);

  // to_class is canonicalization-invariant
  g.exps = {2 + 3 * ipow_u64(3, 7), -1};
  RadicalField canon = canonicalize(f, g);
  KummerClass a = to_class(f, g), b = to_class(f, canon);
  CHECK(a.vec == b.vec);
  CHECK(a.konst == b.konst);

  CHECK(is_identity(to_class(f, trivial_field(2))));
}

TEST_CASE("constant classes need no discrete log") {
  PrimeField f(13, 3, 1);
  RadicalField g;
  g.root_exp = 1;
  g.const_part = 2;  // not a cube mod 13
  g.exps = {0};
  KummerClass c = to_class(f, g);
  CHECK(c.konst == f.pow(2, 4));
  CHECK(mu_order_exp(f, c.konst) == 1);
  // cubes map to the trivial class
  g.const_part = 8;
  CHECK(to_class(f, g).konst == 1);
}

TEST_CASE("subgroup order on the (2,0),(0,1) example over Z/4") {
  PrimeField f(13, 2, 2);
  auto g = KummerSubgroup::span(f, {cls(f, {2, 0}), cls(f, {0, 1})});
  CHECK(g.order_exp() == 3);
  CHECK(g.order() == 8);

  // enumeration oracle: close {(2,0),(0,1)} under addition mod 4
  std::set<std::pair<u64, u64>> all;
  for (u64 x = 0; x < 4; ++x)
    for (u64 y = 0; y < 4; ++y) all.insert({(2 * x) % 4, y % 4});
  CHECK(all.size() == 8);
  for (u64 a = 0; a < 4; ++a)
    for (u64 b = 0; b < 4; ++b)
      CHECK(g.contains(cls(f, {a, b})) == (all.count({a, b}) > 0));

  CHECK(g.contains(class_identity(2)));
  auto elems = g.elements(64);
  CHECK(elems.size() == 8);
}

TEST_CASE("span is invariant under generator rewriting") {
  PrimeField f(19, 3, 2);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<KummerClass> gens;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i)
      gens.push_back(cls(f, {rng() % 9, rng() % 9, rng() % 9}, f.pow(rng() % 18 + 1, 2)));
    auto base = KummerSubgroup::span(f, gens);

    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(base == KummerSubgroup::span(f, shuffled));

    if (k >= 2) {
      auto rewritten = gens;
      rewritten[0] = class_mul(f, rewritten[0], rewritten[1]);
      CHECK(base == KummerSubgroup::span(f, rewritten));
    }

    auto redundant = gens;
    redundant.push_back(class_mul(f, gens[0], gens.back()));
    CHECK(base == KummerSubgroup::span(f, redundant));

    // membership matches exhaustive enumeration
    auto elems = base.elements(4096);
    CHECK(elems.size() == base.order());
    std::set<std::string> keyset;
    for (const auto& e : elems) {
      std::string key;
      for (u64 v : e.vec) key += std::to_string(v) + ",";
      key += "|" + std::to_string(e.konst);
      keyset.insert(key);
    }
    CHECK(keyset.size() == elems.size());
    for (int probe = 0; probe < 30; ++probe) {
      KummerClass c = cls(f, {rng() % 9, rng() % 9, rng() % 9}, f.pow(rng() % 18 + 1, 2));
      std::string key;
      for (u64 v : c.vec) key += std::to_string(v) + ",";
      key += "|" + std::to_string(c.konst);
      CHECK(base.contains(c) == (keyset.count(key) > 0));
    }
  }
}

TEST_CASE("join and constant-only content") {
  PrimeField f(19, 3, 2);
  // a konst-only generator: gamma = 2 is not a cube mod 19
  KummerClass konst_only = cls(f, {0, 0}, f.pow(2, 2));  // chi(2) = 2^((19-1)/9)
  auto g1 = KummerSubgroup::span(f, {konst_only});
  CHECK(g1.const_level() == 2);
  CHECK(g1.order_exp() == 2);
  auto g2 = KummerSubgroup::span(f, {cls(f, {3, 0})});
  auto j = g1.join(g2);
  CHECK(j.order_exp() == 2 + 1);
  CHECK(j.contains(konst_only));
  CHECK(j.contains(cls(f, {3, 0})));
  CHECK_FALSE(j.contains(cls(f, {1, 0})));
}

TEST_CASE("subgroup_ram runs both paths and they agree") {
  PrimeField f(19, 3, 2);
  auto labels = labels_of({1, 2});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RadicalField> gens;
    for (int i = 0; i < 2; ++i) {
      RadicalField g;
      g.root_exp = 1 + static_cast<int>(rng() % 2);
      g.const_part = 1;
      g.exps = {static_cast<i128>(rng() % 9), static_cast<i128>(rng() % 9)};
      gens.push_back(g);
    }
    auto grp = KummerSubgroup::span_radicals(f, gens);
    for (int place : {0, 1, kInfinitePlace})
      CHECK_NOTHROW(subgroup_ram(f, labels, gens, grp, place));
  }

  // trivial subgroup ramifies nowhere
  auto trivial = KummerSubgroup::span_radicals(f, {});
  CHECK(subgroup_ram(f, labels, {}, trivial, 0) == 1);
  CHECK(subgroup_ram(f, labels, {}, trivial, kInfinitePlace) == 1);
}

TEST_CASE("narrow genus group order and infinity index on the golden instance") {
  GenusInstance inst = golden_example_instance();
  auto narrow = narrow_genus(inst);
  auto grp = KummerSubgroup::span_radicals(inst.fld, narrow);
  // prod ell^(n - a_j), a = (0,1,3,3,4,7,8,9)
  CHECK(grp.order_exp() == 45);
  auto labels = inst.labels();
  CHECK(subgroup_ram(inst.fld, labels, narrow, grp, kInfinitePlace) == ipow_u64(3, 5));
  for (size_t j = 0; j < inst.r(); ++j)
    CHECK(subgroup_ram(inst.fld, labels, narrow, grp, static_cast<int>(j)) ==
          inst.fld.ell_pow(inst.fld.n() - inst.primes[j].a));
}

TEST_CASE("howell canonical forms at the full 3^10 modulus") {
  PrimeField f(472393, 3, 10);
  std::mt19937_64 rng(131);
  const u64 m = f.ell_n();
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<KummerClass> gens;
    for (int i = 0; i < 4; ++i)
      gens.push_back(cls(f, {rng() % m, rng() % m, rng() % m, rng() % m},
                         f.pow(rng() % (f.q() - 1) + 1, (f.q() - 1) / m)));
    auto base = KummerSubgroup::span(f, gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled[0] = class_mul(f, shuffled[0], class_pow(f, shuffled[1], rng() % m));
    auto other = KummerSubgroup::span(f, shuffled);
    CHECK(base == other);
    CHECK(base.order_exp() == other.order_exp());
    for (const auto& g : gens) CHECK(other.contains(g));
  }
}
