#pragma once

#include <variant>

#include "kummer/classgroup.hpp"

namespace kummer {

/// One prime of the radicand together with its derived decomposition data:
/// alpha = b * ell^a with gcd(b, ell) = 1, deg P = c * ell^d with gcd(c, ell) = 1.
struct InstancePrime {
  PrimeLabel label;
  i64 alpha = 1;  // multiplicity, in [1, ell^n - 1]
  i64 b = 1;
  int a = 0;
  i64 c = 1;
  int d = 0;
};

/// Validated input (q, ell, n, gamma, factored D), primes sorted so that
/// a_1 <= ... <= a_r (stable; ties keep input order).
struct GenusInstance {
  PrimeField fld;
  u64 gamma = 1;
  std::vector<InstancePrime> primes;
  u128 deg_d = 0;
  int nu = 0;  // ell-adic valuation of deg D (uncapped)
  std::vector<std::string> warnings;

  size_t r() const { return primes.size(); }
  std::vector<PrimeLabel> labels() const;

  /// epsilon = (-1)^(deg D) * gamma
  u64 eps() const;

  /// E = k(ell^n-th root of D*) with D* = (-1)^(deg D) D.
  RadicalField e_radical() const;
  /// K = k(ell^n-th root of gamma D).
  RadicalField k_radical() const;
};

/// A prime as the user states it: a concrete polynomial or an abstract degree.
using PrimeSpec = std::variant<Poly, i64>;

GenusInstance build_instance(const PrimeField& fld, u64 gamma,
                             const std::vector<std::pair<PrimeSpec, i64>>& factors);

/// Factors D first (unit absorbed into gamma), then builds the instance.
GenusInstance build_instance(const PrimeField& fld, u64 gamma, const Poly& d, u64 seed = 0);

}  // namespace kummer
