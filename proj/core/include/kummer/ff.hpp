#pragma once

#include "kummer/int128.hpp"

namespace kummer {

bool is_prime_u64(u64 x);

/// Prime field F_q together with the Kummer data (ell, n), ell^n | q-1.
/// Field elements are canonical residues in [0, q) carried as u64.
class PrimeField {
 public:
  PrimeField(u64 q, u64 ell, int n);

  u64 q() const { return q_; }
  u64 ell() const { return ell_; }
  int n() const { return n_; }
  u64 ell_n() const { return ell_n_; }            // ell^n
  u64 ell_pow(int e) const;                       // ell^e, 0 <= e

  u64 reduce(i128 x) const { return mod_i128(x, q_); }
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= q_ ? s - q_ : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : q_ - a; }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, q_); }
  u64 pow(u64 x, u128 e) const;
  u64 inv(u64 a) const;                           // a != 0
  u64 minus_one() const { return q_ - 1; }

  /// Largest w in [0, n] with eps an ell^w-th power, decided by
  /// eps^((q-1)/ell^w) == 1. Requires eps != 0.
  int lpower_level(u64 eps) const;

  /// alpha = max(0, n-w) - max(0, d-w) with w = lpower_level(eps);
  /// the exponent of [F_q(ell^n-th root of eps) : F_q(ell^d-th root of eps)].
  int alpha_exponent(u64 eps, int d) const;

  bool operator==(const PrimeField& o) const {
    return q_ == o.q_ && ell_ == o.ell_ && n_ == o.n_;
  }

 private:
  u64 q_;
  u64 ell_;
  int n_;
  u64 ell_n_;
};

}  // namespace kummer
