#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kummer/ff.hpp"

namespace kummer {

/// Dense polynomial over F_q in T, coefficients ascending, no trailing zeros.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() : q_(0) {}
  Poly(u64 q, std::vector<u64> coeffs);
  static Poly zero(u64 q) { return Poly(q, {}); }
  static Poly constant(u64 q, u64 c) { return Poly(q, {c % q}); }
  static Poly t(u64 q) { return Poly(q, {0, 1}); }

  u64 q() const { return q_; }
  const std::vector<u64>& coeffs() const { return c_; }
  i64 degree() const { return static_cast<i64>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  u64 leading() const;
  u64 coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool operator==(const Poly& o) const { return q_ == o.q_ && c_ == o.c_; }
  // degree first, then coefficient sequence; gives the deterministic
  // factor order used by factor().
  bool operator<(const Poly& o) const;

 private:
  u64 q_;
  std::vector<u64> c_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly mul_scalar(const Poly& a, u64 s);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);  // b != 0
Poly rem(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(const Poly& a, const Poly& b);  // monic gcd, gcd(0,0) = 0
Poly powmod(const Poly& base, u128 e, const Poly& mod);
Poly derivative(const Poly& a);
u64 eval(const Poly& a, u64 x);

std::string to_coeff_string(const Poly& a);
Poly poly_from_coeff_string(u64 q, const std::string& s);

/// unit * prod(factors[i].first ^ factors[i].second) reproduces the input;
/// factors monic irreducible, pairwise distinct, deterministic order.
struct Factorization {
  u64 unit = 1;
  std::vector<std::pair<Poly, int>> factors;
};

bool is_irreducible(const Poly& p);  // deg >= 1
Factorization factor(const Poly& p, std::mt19937_64& rng);
Factorization factor(const Poly& p, u64 seed = 0);

}  // namespace kummer
