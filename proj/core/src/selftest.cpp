#include "kummer/selftest.hpp"

#include <chrono>

#include "kummer/oracle.hpp"
#include "kummer/random_instance.hpp"

namespace kummer {

namespace {

using Clock = std::chrono::steady_clock;

void note_failure(CriterionResult& res, const std::string& line) {
  res.pass = false;
  if (res.lines.size() < 40) res.lines.push_back(line);
}

GenusInstance abstract_instance(u64 q, u64 ell, int n, u64 gamma,
                                const std::vector<std::pair<i64, i64>>& deg_alpha) {
  PrimeField fld(q, ell, n);
  std::vector<std::pair<PrimeSpec, i64>> factors;
  for (auto [deg, alpha] : deg_alpha) factors.emplace_back(deg, alpha);
  return build_instance(fld, gamma, factors);
}

// golden example, recorded reference values, exact
CriterionResult criterion1() {
  CriterionResult res{1, "golden example (8-prime abstract instance), exact", true};
  auto reports = golden_example_checks();
  res.cases = static_cast<long>(reports.size());
  for (const auto& r : reports)
    if (!r.pass) note_failure(res, r.name + ": " + r.details);
  return res;
}

// oracle equivalence over the small parameter lattice
CriterionResult criterion2() {
  CriterionResult res{2, "oracle equivalence (ell^n in {2,3,4,9}, r <= 3, deg <= 6)", true};
  struct Combo {
    u64 q, ell;
    int n;
  };
  const std::vector<Combo> combos{{13, 2, 1}, {13, 3, 1}, {13, 2, 2}, {19, 2, 1},
                                  {19, 3, 1}, {19, 3, 2}, {37, 2, 1}, {37, 3, 1},
                                  {37, 2, 2}, {37, 3, 2}};
  std::mt19937_64 rng(20240811);

  auto run_one = [&](const GenusInstance& inst, const std::string& tag) {
    ++res.cases;
    try {
      auto cyc = cyclotomic_genus(inst);
      auto theorem = generator_span(inst.fld, cyc.e_ge);
      auto oracle = oracle_genus(inst);
      if (!(theorem == oracle.group))
        note_failure(res, tag + ": theorem subgroup differs from oracle");
    } catch (const std::exception& e) {
      note_failure(res, tag + ": exception: " + e.what());
    }
  };

  for (const auto& cb : combos) {
    u64 elln = ipow_u64(cb.ell, static_cast<unsigned>(cb.n));
    std::vector<std::pair<i64, i64>> atoms;
    for (i64 deg = 1; deg <= 6; ++deg)
      for (i64 alpha = 1; alpha < static_cast<i64>(elln); ++alpha) atoms.emplace_back(deg, alpha);
    std::string base = std::to_string(cb.q) + "/" + std::to_string(cb.ell) + "^" +
                       std::to_string(cb.n);
    // exhaustive for r = 1 and r = 2
    for (size_t i = 0; i < atoms.size(); ++i)
      run_one(abstract_instance(cb.q, cb.ell, cb.n, 1, {atoms[i]}), base + " r1#" + std::to_string(i));
    for (size_t i = 0; i < atoms.size(); ++i)
      for (size_t k = i; k < atoms.size(); ++k)
        run_one(abstract_instance(cb.q, cb.ell, cb.n, 1, {atoms[i], atoms[k]}),
                base + " r2#" + std::to_string(i) + "." + std::to_string(k));
    // sampled r = 3
    std::uniform_int_distribution<size_t> pick(0, atoms.size() - 1);
    for (int s = 0; s < 8; ++s)
      run_one(abstract_instance(cb.q, cb.ell, cb.n, 1,
                                {atoms[pick(rng)], atoms[pick(rng)], atoms[pick(rng)]}),
              base + " r3#" + std::to_string(s));
  }
  return res;
}

// n = 1: the general construction agrees with the specialized one
CriterionResult criterion3() {
  CriterionResult res{3, "n = 1 consistency over 500 seeded instances", true};
  struct QL {
    u64 q, ell;
  };
  const std::vector<QL> pool{{13, 2}, {13, 3}, {19, 2}, {19, 3}, {31, 2}, {31, 3}, {31, 5}};
  std::mt19937_64 rng(515151);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& ql = pool[static_cast<size_t>(trial) % pool.size()];
    RandomParams params{ql.q, ql.ell, 1, 4, 6, false};
    GenusInstance inst = random_instance(rng, params);
    ++res.cases;
    try {
      GenusCertificate cert = genus_field(inst);
      auto general = generator_span(inst.fld, cert.k_ge);
      auto special = generator_span(inst.fld, peng_n1(inst));
      if (!(general == special))
        note_failure(res, "trial " + std::to_string(trial) + ": subgroups differ (q=" +
                              std::to_string(ql.q) + ", ell=" + std::to_string(ql.ell) + ")");
    } catch (const std::exception& e) {
      note_failure(res, "trial " + std::to_string(trial) + ": exception: " + e.what());
    }
  }
  return res;
}

GenusInstance corpus_instance(std::mt19937_64& rng, int trial) {
  const u64 ell = trial % 2 == 0 ? 2 : 3;
  const int n = 1 + (trial / 2) % 3;
  const u64 q = ell == 2 ? 41 : 109;
  RandomParams params{q, ell, n, 4, 6, false};
  return random_instance(rng, params);
}

// the invariant suite over 1000 seeded instances
CriterionResult criterion4() {
  CriterionResult res{4, "invariant suite over 1000 seeded instances", true};
  std::mt19937_64 rng(777001);
  for (int trial = 0; trial < 1000; ++trial) {
    GenusInstance inst = corpus_instance(rng, trial);
    ++res.cases;
    try {
      GenusCertificate cert = genus_field(inst);
      auto reports = check_certificate(cert);
      if (!all_pass(reports))
        note_failure(res, "trial " + std::to_string(trial) + ": " + summarize(reports));
      CheckReport cmp = check_ramification_comparison(inst);
      if (!cmp.pass) note_failure(res, "trial " + std::to_string(trial) + ": " + cmp.details);
    } catch (const std::exception& e) {
      note_failure(res, "trial " + std::to_string(trial) + ": exception: " + e.what());
    }
  }
  return res;
}

// raw and canonical generator forms are interchangeable
CriterionResult criterion5() {
  CriterionResult res{5, "canonicalization invariance on the same corpus", true};
  std::mt19937_64 rng(777001);
  auto labels_span = [](const std::vector<PrimeLabel>& v) {
    return std::span<const PrimeLabel>(v);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    GenusInstance inst = corpus_instance(rng, trial);
    ++res.cases;
    try {
      GenusCertificate cert = genus_field(inst);
      auto labels = inst.labels();
      auto check_list = [&](const std::vector<Generator>& gens, const char* which) {
        for (const auto& g : gens) {
          for (size_t j = 0; j < inst.r(); ++j)
            if (ram_index_finite(inst.fld, g.raw, j) != ram_index_finite(inst.fld, g.canonical, j))
              note_failure(res, std::string(which) + ": finite ramification changed (trial " +
                                    std::to_string(trial) + ")");
          if (ram_index_infinity(inst.fld, labels_span(labels), g.raw) !=
              ram_index_infinity(inst.fld, labels_span(labels), g.canonical))
            note_failure(res, std::string(which) + ": infinite ramification changed (trial " +
                                  std::to_string(trial) + ")");
        }
        if (!(generator_span(inst.fld, gens) == generator_span(inst.fld, gens, true)))
          note_failure(res, std::string(which) + ": subgroup changed (trial " +
                                std::to_string(trial) + ")");
      };
      check_list(cert.e_gex, "E_gex");
      check_list(cert.e_ge, "E_ge");
      check_list(cert.k_ge, "K_ge");
    } catch (const std::exception& e) {
      note_failure(res, "trial " + std::to_string(trial) + ": exception: " + e.what());
    }
  }
  return res;
}

// factor / multiply-back round trip
CriterionResult criterion6() {
  CriterionResult res{6, "factorization round-trip, 500 random monic products", true};
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 500; ++trial) {
    const u64 q = trial % 2 == 0 ? 13 : 19;
    ++res.cases;
    std::uniform_int_distribution<int> nf(1, 4);
    std::uniform_int_distribution<i64> dd(1, 4);
    std::uniform_int_distribution<u64> unit(1, q - 1);
    Poly prod = Poly::constant(q, unit(rng));
    i64 total = 0;
    int parts = nf(rng);
    for (int i = 0; i < parts && total < 12; ++i) {
      i64 deg = std::min<i64>(dd(rng), 12 - total);
      if (deg < 1) break;
      prod = mul(prod, random_monic(rng, q, deg));
      total += deg;
    }
    try {
      Factorization fac = factor(prod, rng);
      Poly back = Poly::constant(q, fac.unit);
      for (const auto& [p, mult] : fac.factors)
        for (int i = 0; i < mult; ++i) back = mul(back, p);
      if (!(back == prod))
        note_failure(res, "trial " + std::to_string(trial) + ": multiply-back differs");
      for (const auto& [p, mult] : fac.factors) {
        if (!p.is_monic() || !is_irreducible(p))
          note_failure(res, "trial " + std::to_string(trial) + ": non-irreducible factor");
        if (mult < 1) note_failure(res, "trial " + std::to_string(trial) + ": bad multiplicity");
      }
    } catch (const std::exception& e) {
      note_failure(res, "trial " + std::to_string(trial) + ": exception: " + e.what());
    }
  }
  return res;
}

// single-exponent mutations are detected (or provably benign)
CriterionResult criterion7() {
  CriterionResult res{7, "mutation sensitivity over 100 certificates", true};
  std::mt19937_64 rng(990011);
  MutationStats totals;
  for (int trial = 0; trial < 100; ++trial) {
    GenusInstance inst = corpus_instance(rng, trial);
    try {
      GenusCertificate cert = genus_field(inst);
      MutationStats s = mutation_sweep(cert, 48);
      totals.total += s.total;
      totals.detected += s.detected;
      totals.detected_semantic += s.detected_semantic;
      totals.undetected_same_subgroup += s.undetected_same_subgroup;
      totals.undetected_changed_subgroup += s.undetected_changed_subgroup;
    } catch (const std::exception& e) {
      note_failure(res, "trial " + std::to_string(trial) + ": exception: " + e.what());
    }
  }
  res.cases = totals.total;
  double rate = totals.total == 0 ? 0.0 : 100.0 * totals.detected / totals.total;
  char line[256];
  std::snprintf(line, sizeof line,
                "detected %d/%d mutations (%.2f%%), %d by semantic invariants alone; "
                "benign undetected: %d; harmful undetected: %d",
                totals.detected, totals.total, rate, totals.detected_semantic,
                totals.undetected_same_subgroup, totals.undetected_changed_subgroup);
  res.lines.push_back(line);
  if (rate < 95.0) note_failure(res, "detection rate below 95%");
  if (totals.undetected_changed_subgroup != 0)
    note_failure(res, "an undetected mutation changed the subgroup");
  return res;
}

}  // namespace

CriterionResult run_criterion(int id) {
  auto t0 = Clock::now();
  CriterionResult res;
  switch (id) {
    case 1: res = criterion1(); break;
    case 2: res = criterion2(); break;
    case 3: res = criterion3(); break;
    case 4: res = criterion4(); break;
    case 5: res = criterion5(); break;
    case 6: res = criterion6(); break;
    case 7: res = criterion7(); break;
    default: throw domain_error("criterion id must be in [1, 7]");
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 7; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace kummer
