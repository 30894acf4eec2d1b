#pragma once

#include <map>
#include <optional>

#include "kummer/instance.hpp"

namespace kummer {

struct InfinityProfile {
  int m = 0;   // e_infinity(E_gex/k) = ell^m
  int t = 0;   // e_infinity(E/k) = ell^t
  int i0 = 0;  // 1-based index attaining m (largest such)
};

struct BezoutPair {
  i128 a = 0;
  i128 b = 0;
};

/// A generator together with its canonical form and the case of the
/// four-way table it came from.
struct Generator {
  int j = 0;  // 1-based prime index it is attached to; 0 for K itself
  RadicalField raw;
  RadicalField canonical;
  std::string role;
};

struct GenusOptions {
  std::optional<BezoutPair> bezout_override;
  std::optional<int> i0_override;  // 1-based; must attain m
};

struct GenusCertificate {
  GenusInstance inst;
  InfinityProfile sel;
  u128 deg_d = 0;
  int nu = 0;
  int d = 0;      // min(n, nu)
  u64 eps = 1;    // (-1)^(deg D) gamma
  int eps_level = 0;
  int alpha = 0;
  int f_exp = 0;  // inertia exponent of the infinite place in K/k
  std::optional<BezoutPair> bezout;
  std::map<int, i128> z;  // j < i0
  std::map<int, i64> y;   // j > i0
  std::vector<Generator> e_gex;
  std::vector<Generator> e_ge;
  std::vector<Generator> k_ge;
};

/// E_j = k(ell^(n-a_j)-th root of P_j*), the narrow genus field generators.
std::vector<RadicalField> narrow_genus(const GenusInstance& inst);

InfinityProfile select_i0(const GenusInstance& inst);

/// a * deg P_i0 + b * ell^n = ell^(d_i0), with a the balanced representative
/// of c_i0^-1 mod ell^(n - d_i0). Requires gcd(deg P_i0, ell^n) = ell^(d_i0).
BezoutPair bezout_l(const GenusInstance& inst, int i0);

struct CyclotomicResult {
  InfinityProfile sel;
  std::optional<BezoutPair> bezout;
  std::map<int, i128> z;
  std::map<int, i64> y;
  std::vector<Generator> e_gex;
  std::vector<Generator> e_ge;
};

/// Generators of the genus field of E = k(ell^n-th root of D*).
CyclotomicResult cyclotomic_genus(const GenusInstance& inst, const GenusOptions& opts = {});

/// Full certificate for the genus field of K = k(ell^n-th root of gamma D).
GenusCertificate genus_field(const GenusInstance& inst, const GenusOptions& opts = {});

/// The n = 1 construction, implemented literally from its own case split
/// (reordering so the m-attaining prime is last). Returns the K_ge
/// generator list; requires n = 1.
std::vector<Generator> peng_n1(const GenusInstance& inst);

KummerSubgroup generator_span(const PrimeField& fld, const std::vector<Generator>& gens,
                              bool canonical = false);

}  // namespace kummer
