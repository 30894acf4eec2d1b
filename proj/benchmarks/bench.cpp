#include <benchmark/benchmark.h>

#include <random>

#include "kummer/checks.hpp"
#include "kummer/oracle.hpp"
#include "kummer/random_instance.hpp"

using namespace kummer;

static void BM_FactorDeg32(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Poly p = random_monic(rng, 472393, 32);
  for (auto _ : state) {
    std::mt19937_64 r(2);
    benchmark::DoNotOptimize(factor(p, r));
  }
}
BENCHMARK(BM_FactorDeg32);

static void BM_HowellSpan(benchmark::State& state) {
  PrimeField fld(472393, 3, 10);
  std::mt19937_64 rng(3);
  std::vector<KummerClass> gens;
  for (int i = 0; i < 8; ++i) {
    KummerClass c;
    for (int j = 0; j < 8; ++j) c.vec.push_back(rng() % fld.ell_n());
    c.konst = fld.pow(rng() % (fld.q() - 1) + 1, (fld.q() - 1) / fld.ell_n());
    gens.push_back(std::move(c));
  }
  for (auto _ : state) benchmark::DoNotOptimize(KummerSubgroup::span(fld, gens));
}
BENCHMARK(BM_HowellSpan);

static void BM_GenusFieldGolden(benchmark::State& state) {
  GenusInstance inst = golden_example_instance();
  for (auto _ : state) benchmark::DoNotOptimize(genus_field(inst));
}
BENCHMARK(BM_GenusFieldGolden);

static void BM_CheckCertificateGolden(benchmark::State& state) {
  GenusInstance inst = golden_example_instance();
  GenusCertificate cert = genus_field(inst);
  for (auto _ : state) benchmark::DoNotOptimize(check_certificate(cert));
}
BENCHMARK(BM_CheckCertificateGolden);

static void BM_OracleNineCubed(benchmark::State& state) {
  PrimeField fld(19, 3, 2);
  GenusInstance inst = build_instance(
      fld, 1,
      {std::pair<PrimeSpec, i64>{i64(1), i64(1)}, std::pair<PrimeSpec, i64>{i64(2), i64(3)},
       std::pair<PrimeSpec, i64>{i64(5), i64(4)}});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_genus(inst));
}
BENCHMARK(BM_OracleNineCubed);

BENCHMARK_MAIN();
