#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kummer/poly.hpp"

namespace kummer {

/// A prime of F_q[T], either concrete (a monic irreducible) or abstract
/// (degree only). The construction depends on P_j only through its degree
/// and exponent, so abstract primes are first-class citizens.
struct PrimeLabel {
  int index = 0;  // 1-based position in the instance
  i64 degree = 0;
  std::optional<Poly> concrete;
};

/// Write x = b * ell^a with gcd(b, ell) = 1. Requires x >= 1.
struct Decomposition {
  i64 unit;  // b
  int val;   // a
};
Decomposition decompose(i64 x, u64 ell);

struct WideDecomposition {
  u128 unit;
  int val;
};
WideDecomposition decompose_wide(u128 x, u64 ell);

/// Symbolic radical field k(ell^s-th root of const_part * prod P_j^exps[j]).
/// s = 0 is the trivial field k. Exponents are raw integers; canonicalize()
/// reduces them into [0, ell^s).
struct RadicalField {
  int root_exp = 0;   // s; the root order is ell^s
  u64 const_part = 1; // element of F_q^*
  std::vector<i128> exps;

  bool is_trivial() const { return root_exp == 0; }
};

RadicalField trivial_field(size_t r);

/// Ramification index of the prime at position pos (0-based) in f/k:
/// ell^s / gcd(exps[pos], ell^s).
u64 ram_index_finite(const PrimeField& fld, const RadicalField& f, size_t pos);

/// Ramification index of the infinite place in f/k:
/// ell^s / gcd(ell^s, deg of the radicand). Constants never ramify.
u64 ram_index_infinity(const PrimeField& fld, std::span<const PrimeLabel> primes,
                       const RadicalField& f);

/// Same field, exponents reduced into [0, ell^s); a constant whose class mod
/// ell^s-th powers is trivial is normalized to 1 (for odd ell this erases
/// the sign of the star convention; for ell = 2 a surviving sign is kept).
RadicalField canonicalize(const PrimeField& fld, const RadicalField& f);

}  // namespace kummer
