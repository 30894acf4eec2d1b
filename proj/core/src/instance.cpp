#include "kummer/instance.hpp"

#include <algorithm>

namespace kummer {

std::vector<PrimeLabel> GenusInstance::labels() const {
  std::vector<PrimeLabel> out;
  out.reserve(primes.size());
  for (const auto& p : primes) out.push_back(p.label);
  return out;
}

u64 GenusInstance::eps() const {
  return deg_d % 2 == 0 ? gamma : fld.mul(gamma, fld.minus_one());
}

RadicalField GenusInstance::e_radical() const {
  RadicalField f;
  f.root_exp = fld.n();
  f.const_part = deg_d % 2 == 0 ? 1 : fld.minus_one();
  f.exps.reserve(primes.size());
  for (const auto& p : primes) f.exps.push_back(p.alpha);
  return f;
}

RadicalField GenusInstance::k_radical() const {
  RadicalField f;
  f.root_exp = fld.n();
  f.const_part = gamma;
  f.exps.reserve(primes.size());
  for (const auto& p : primes) f.exps.push_back(p.alpha);
  return f;
}

GenusInstance build_instance(const PrimeField& fld, u64 gamma,
                             const std::vector<std::pair<PrimeSpec, i64>>& factors) {
  GenusInstance inst{fld};
  if (gamma % fld.q() == 0) throw domain_error("gamma must be nonzero");
  inst.gamma = gamma % fld.q();

  std::vector<Poly> seen_concrete;
  for (const auto& [spec, mult] : factors) {
    InstancePrime p;
    if (std::holds_alternative<Poly>(spec)) {
      const Poly& poly = std::get<Poly>(spec);
      if (poly.q() != fld.q()) throw domain_error("prime over a different field");
      if (poly.degree() < 1) throw domain_error("claimed prime is constant");
      if (!poly.is_monic()) throw domain_error("claimed prime is not monic: " + to_coeff_string(poly));
      if (!is_irreducible(poly))
        throw domain_error("claimed prime is reducible: " + to_coeff_string(poly));
      for (const auto& old : seen_concrete)
        if (old == poly) throw domain_error("repeated prime in factored input");
      seen_concrete.push_back(poly);
      p.label.degree = poly.degree();
      p.label.concrete = poly;
    } else {
      i64 deg = std::get<i64>(spec);
      if (deg < 1) throw domain_error("abstract prime degree must be >= 1");
      p.label.degree = deg;
    }
    if (mult < 1) throw domain_error("prime multiplicity must be >= 1");
    i64 red = static_cast<i64>(mod_i128(mult, fld.ell_n()));
    if (red == 0) {
      inst.warnings.push_back("dropping prime of degree " + std::to_string(p.label.degree) +
                              ": multiplicity " + std::to_string(mult) +
                              " is an ell^n-th power");
      continue;
    }
    p.alpha = red;
    auto [b, a] = decompose(p.alpha, fld.ell());
    p.b = b;
    p.a = a;
    auto [c, d] = decompose(p.label.degree, fld.ell());
    p.c = c;
    p.d = d;
    inst.primes.push_back(std::move(p));
  }
  if (inst.primes.empty())
    throw domain_error("no primes remain: D is constant or an ell^n-th power");

  std::stable_sort(inst.primes.begin(), inst.primes.end(),
                   [](const InstancePrime& x, const InstancePrime& y) { return x.a < y.a; });
  for (size_t j = 0; j < inst.primes.size(); ++j)
    inst.primes[j].label.index = static_cast<int>(j) + 1;

  u128 deg = 0;
  for (const auto& p : inst.primes) {
    u128 term = (u128)p.alpha * (u128)p.label.degree;
    if (term > ~(u128)0 - deg) throw domain_error("deg D overflows 128 bits");
    deg += term;
  }
  inst.deg_d = deg;
  inst.nu = nu_ell(deg, fld.ell());
  return inst;
}

GenusInstance build_instance(const PrimeField& fld, u64 gamma, const Poly& d, u64 seed) {
  if (d.is_zero()) throw domain_error("D must be nonzero");
  if (d.degree() < 1) throw domain_error("D must be non-constant");
  Factorization fac = factor(d, seed);
  // absorb the unit of D into gamma
  u64 g = mulmod(gamma % fld.q(), fac.unit, fld.q());
  std::vector<std::pair<PrimeSpec, i64>> factors;
  factors.reserve(fac.factors.size());
  for (const auto& [p, mult] : fac.factors) factors.emplace_back(p, mult);
  return build_instance(fld, g, factors);
}

}  // namespace kummer
