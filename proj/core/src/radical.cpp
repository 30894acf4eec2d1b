#include "kummer/radical.hpp"

namespace kummer {

Decomposition decompose(i64 x, u64 ell) {
  if (x < 1) throw domain_error("decompose requires x >= 1");
  int a = 0;
  while (x % static_cast<i64>(ell) == 0) {
    x /= static_cast<i64>(ell);
    ++a;
  }
  return {x, a};
}

WideDecomposition decompose_wide(u128 x, u64 ell) {
  if (x == 0) throw domain_error("decompose requires x >= 1");
  int a = 0;
  while (x % ell == 0) {
    x /= ell;
    ++a;
  }
  return {x, a};
}

RadicalField trivial_field(size_t r) {
  RadicalField f;
  f.root_exp = 0;
  f.const_part = 1;
  f.exps.assign(r, 0);
  return f;
}

u64 ram_index_finite(const PrimeField& fld, const RadicalField& f, size_t pos) {
  if (f.root_exp == 0) return 1;
  if (pos >= f.exps.size()) return 1;
  i128 e = f.exps[pos];
  if (e == 0) return 1;
  int v = std::min(nu_ell(e, fld.ell()), f.root_exp);
  return fld.ell_pow(f.root_exp - v);
}

u64 ram_index_infinity(const PrimeField& fld, std::span<const PrimeLabel> primes,
                       const RadicalField& f) {
  if (f.root_exp == 0) return 1;
  if (f.exps.size() != primes.size()) throw internal_error("radical/prime arity mismatch");
  i128 deg = 0;
  for (size_t j = 0; j < primes.size(); ++j) {
    i128 term;
    if (__builtin_mul_overflow(f.exps[j], (i128)primes[j].degree, &term) ||
        __builtin_add_overflow(deg, term, &deg))
      throw domain_error("radicand degree overflows 128 bits");
  }
  if (deg == 0) return 1;
  int v = std::min(nu_ell(deg, fld.ell()), f.root_exp);
  return fld.ell_pow(f.root_exp - v);
}

RadicalField canonicalize(const PrimeField& fld, const RadicalField& f) {
  RadicalField out;
  out.root_exp = f.root_exp;
  out.exps.assign(f.exps.size(), 0);
  if (f.root_exp == 0) {
    out.const_part = 1;
    return out;
  }
  u64 order = fld.ell_pow(f.root_exp);
  for (size_t j = 0; j < f.exps.size(); ++j) out.exps[j] = mod_i128(f.exps[j], order);
  // const is an ell^s-th power iff const^((q-1)/ell^s) = 1
  u64 c = f.const_part % fld.q();
  if (c == 0) throw domain_error("radical constant must be nonzero");
  out.const_part = fld.pow(c, (fld.q() - 1) / order) == 1 ? 1 : c;
  return out;
}

}  // namespace kummer
