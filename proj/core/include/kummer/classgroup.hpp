#pragma once

#include <string>

#include "kummer/radical.hpp"

namespace kummer {

/// Class of a radicand in k*/(k*)^(ell^n): the exponent vector over the
/// instance primes together with the constant class. The constant class is
/// carried as chi(c) = c^((q-1)/ell^n), an element of the group of
/// ell^n-th roots of unity in F_q; chi is injective on classes, so no
/// discrete logarithm is ever needed.
struct KummerClass {
  std::vector<u64> vec;  // entries in [0, ell^n)
  u64 konst = 1;         // element of mu_{ell^n} subset F_q^*
};

KummerClass class_identity(size_t r);
bool is_identity(const KummerClass& c);
KummerClass class_mul(const PrimeField& fld, const KummerClass& a, const KummerClass& b);
KummerClass class_pow(const PrimeField& fld, const KummerClass& a, u64 e);

/// Scale a radical field of root order ell^s to the common exponent ell^n:
/// k(ell^s-th root of X) = k(ell^n-th root of X^(ell^(n-s))).
KummerClass to_class(const PrimeField& fld, const RadicalField& f);

/// Order of an element of mu_{ell^n} as an exponent: smallest e with
/// x^(ell^e) = 1.
int mu_order_exp(const PrimeField& fld, u64 x);

/// Subgroup of (Z/ell^n)^r x mu_{ell^n} in Howell normal form. The vec part
/// is a canonical row-reduced matrix over the local ring Z/ell^n; the
/// constant column rides along multiplicatively. The constant-only part of
/// the subgroup is mu_{ell^j0}, canonically determined by j0 alone; row
/// constants are canonicalized as konst^(ell^j0), which identifies their
/// coset exactly. Equal subgroups have identical canonical data.
class KummerSubgroup {
 public:
  static KummerSubgroup span(const PrimeField& fld, std::vector<KummerClass> gens);
  static KummerSubgroup span_radicals(const PrimeField& fld,
                                      const std::vector<RadicalField>& gens);

  bool contains(const KummerClass& c) const;
  KummerSubgroup join(const KummerSubgroup& other) const;

  int order_exp() const { return order_exp_; }  // log_ell of the order
  u128 order() const;

  size_t rank() const { return rows_.size(); }
  const std::vector<KummerClass>& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }
  const std::vector<int>& pivot_vals() const { return pivot_vals_; }
  int const_level() const { return const_level_; }
  u64 const_gen() const { return const_gen_; }

  /// Canonical encoding; equal strings iff equal subgroups.
  std::string canonical_key() const;
  bool operator==(const KummerSubgroup& o) const { return canonical_key() == o.canonical_key(); }

  const PrimeField& field() const { return fld_; }
  size_t width() const { return width_; }

  /// Enumerate all elements (throws if the order exceeds the cap).
  std::vector<KummerClass> elements(size_t cap) const;

 private:
  explicit KummerSubgroup(const PrimeField& fld) : fld_(fld) {}

  PrimeField fld_;
  size_t width_ = 0;
  std::vector<KummerClass> rows_;       // Howell rows, konst = representative
  std::vector<int> pivot_cols_;
  std::vector<int> pivot_vals_;         // pivot = ell^val
  std::vector<u64> canon_konst_;        // konst^(ell^j0) per row
  int const_level_ = 0;                 // j0
  u64 const_gen_ = 1;                   // some generator of mu_{ell^j0}
  int order_exp_ = 0;
};

constexpr int kInfinitePlace = -1;

/// Ramification index of a place in the compositum field of the given
/// generators: computed both as lcm of the generator indices and as the
/// order of the valuation image of the spanned subgroup; the two must agree.
u64 subgroup_ram(const PrimeField& fld, std::span<const PrimeLabel> primes,
                 const std::vector<RadicalField>& gens, const KummerSubgroup& group,
                 int place);

}  // namespace kummer
