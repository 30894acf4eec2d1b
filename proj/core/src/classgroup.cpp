#include "kummer/classgroup.hpp"

#include <algorithm>
#include <sstream>

namespace kummer {

namespace {

// valuation of x in [0, M) with val(0) = n
int val_mod(u64 x, u64 ell, int n) {
  if (x == 0) return n;
  int v = 0;
  while (x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v;
}

u64 inv_unit_mod(u64 u, u64 m) {
  // extended Euclid; u must be a unit mod m
  i128 r0 = m, r1 = u % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    i128 r2 = r0 - q * r1;
    i128 s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw internal_error("non-unit inverse requested");
  return mod_i128(s0, m);
}

struct Row {
  std::vector<u64> vec;
  u64 konst;
};

bool vec_zero(const std::vector<u64>& v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

}  // namespace

KummerClass class_identity(size_t r) {
  KummerClass c;
  c.vec.assign(r, 0);
  c.konst = 1;
  return c;
}

bool is_identity(const KummerClass& c) {
  return c.konst == 1 && vec_zero(c.vec);
}

KummerClass class_mul(const PrimeField& fld, const KummerClass& a, const KummerClass& b) {
  if (a.vec.size() != b.vec.size()) throw domain_error("class arity mismatch");
  KummerClass c;
  c.vec.resize(a.vec.size());
  const u64 m = fld.ell_n();
  for (size_t i = 0; i < a.vec.size(); ++i) c.vec[i] = (a.vec[i] + b.vec[i]) % m;
  c.konst = fld.mul(a.konst, b.konst);
  return c;
}

KummerClass class_pow(const PrimeField& fld, const KummerClass& a, u64 e) {
  KummerClass c;
  c.vec.resize(a.vec.size());
  const u64 m = fld.ell_n();
  for (size_t i = 0; i < a.vec.size(); ++i) c.vec[i] = mulmod(a.vec[i], e % m, m);
  c.konst = fld.pow(a.konst, e);
  return c;
}

KummerClass to_class(const PrimeField& fld, const RadicalField& f) {
  KummerClass c;
  c.vec.assign(f.exps.size(), 0);
  c.konst = 1;
  if (f.root_exp == 0) return c;
  const u64 order = fld.ell_pow(f.root_exp);       // ell^s
  const u64 scale = fld.ell_n() / order;           // ell^(n-s)
  for (size_t j = 0; j < f.exps.size(); ++j)
    c.vec[j] = mulmod(mod_i128(f.exps[j], order), scale, fld.ell_n());
  u64 cp = f.const_part % fld.q();
  if (cp == 0) throw domain_error("radical constant must be nonzero");
  // chi of the scaled constant: c^((q-1)/ell^s)
  c.konst = fld.pow(cp, (fld.q() - 1) / order);
  return c;
}

int mu_order_exp(const PrimeField& fld, u64 x) {
  x %= fld.q();
  int e = 0;
  while (x != 1) {
    x = fld.pow(x, fld.ell());
    ++e;
    if (e > fld.n()) throw internal_error("element not in mu_{ell^n}");
  }
  return e;
}

KummerSubgroup KummerSubgroup::span(const PrimeField& fld, std::vector<KummerClass> gens) {
  KummerSubgroup g(fld);
  size_t width = gens.empty() ? 0 : gens[0].vec.size();
  for (const auto& c : gens)
    if (c.vec.size() != width) throw domain_error("generators of different arity");
  g.width_ = width;

  const u64 m = fld.ell_n();
  const u64 ell = fld.ell();
  const int n = fld.n();

  std::vector<Row> work;
  work.reserve(gens.size());
  for (auto& c : gens) {
    Row r{std::move(c.vec), c.konst};
    for (auto& x : r.vec) x %= m;
    work.push_back(std::move(r));
  }

  auto scale_row = [&](Row& r, u64 s) {
    for (auto& x : r.vec) x = mulmod(x, s % m, m);
    r.konst = fld.pow(r.konst, s);
  };
  auto sub_mult = [&](Row& a, u64 f, const Row& b) {
    f %= m;
    for (size_t i = 0; i < a.vec.size(); ++i) {
      u64 t = mulmod(f, b.vec[i], m);
      a.vec[i] = a.vec[i] >= t ? a.vec[i] - t : a.vec[i] + m - t;
    }
    // konst_a *= konst_b^(-f); konst has order dividing ell^n
    a.konst = fld.mul(a.konst, fld.pow(b.konst, m - f == m ? 0 : m - f));
  };

  std::vector<Row> result;
  std::vector<int> pivot_cols, pivot_vals;

  for (size_t col = 0; col < width; ++col) {
    int best = -1, best_val = n;
    for (size_t i = 0; i < work.size(); ++i) {
      int v = val_mod(work[i].vec[col], ell, n);
      if (v < best_val) {
        best_val = v;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) continue;
    Row piv = std::move(work[static_cast<size_t>(best)]);
    work.erase(work.begin() + best);
    u64 unit = piv.vec[col] / ipow_u64(ell, static_cast<unsigned>(best_val));
    scale_row(piv, inv_unit_mod(unit, m));
    u64 pval = ipow_u64(ell, static_cast<unsigned>(best_val));
    for (auto& w : work) {
      if (w.vec[col] == 0) continue;
      sub_mult(w, w.vec[col] / pval, piv);
    }
    // Howell closure: the annihilator multiple of the pivot row stays in
    // the worklist so its tail is accounted for in later columns.
    if (best_val > 0) {
      Row shifted = piv;
      scale_row(shifted, m / pval);
      if (!vec_zero(shifted.vec) || shifted.konst != 1) work.push_back(std::move(shifted));
    }
    result.push_back(std::move(piv));
    pivot_cols.push_back(static_cast<int>(col));
    pivot_vals.push_back(best_val);
  }

  // leftover rows have zero vec part; they generate the constant-only part
  int j0 = 0;
  u64 cgen = 1;
  for (const auto& w : work) {
    if (!vec_zero(w.vec)) throw internal_error("howell: unreduced row survived");
    int e = mu_order_exp(fld, w.konst);
    if (e > j0) {
      j0 = e;
      cgen = w.konst;
    }
  }

  // back-reduction: entries above each pivot into [0, pivot)
  for (size_t i = 0; i < result.size(); ++i) {
    u64 pval = ipow_u64(ell, static_cast<unsigned>(pivot_vals[i]));
    size_t c = static_cast<size_t>(pivot_cols[i]);
    for (size_t j = 0; j < i; ++j) {
      u64 e = result[j].vec[c];
      if (e >= pval) sub_mult(result[j], e / pval, result[i]);
    }
  }

  g.rows_.reserve(result.size());
  for (auto& r : result) g.rows_.push_back(KummerClass{std::move(r.vec), r.konst});
  g.pivot_cols_ = std::move(pivot_cols);
  g.pivot_vals_ = std::move(pivot_vals);
  g.const_level_ = j0;
  g.const_gen_ = cgen;
  g.canon_konst_.reserve(g.rows_.size());
  u64 j0pow = ipow_u64(ell, static_cast<unsigned>(j0));
  int oe = j0;
  for (size_t i = 0; i < g.rows_.size(); ++i) {
    g.canon_konst_.push_back(fld.pow(g.rows_[i].konst, j0pow));
    oe += n - g.pivot_vals_[i];
  }
  g.order_exp_ = oe;
  return g;
}

KummerSubgroup KummerSubgroup::span_radicals(const PrimeField& fld,
                                             const std::vector<RadicalField>& gens) {
  std::vector<KummerClass> cls;
  cls.reserve(gens.size());
  for (const auto& f : gens) cls.push_back(to_class(fld, f));
  return span(fld, std::move(cls));
}

bool KummerSubgroup::contains(const KummerClass& c) const {
  if (c.vec.size() != width_) throw domain_error("class arity mismatch");
  const u64 m = fld_.ell_n();
  const u64 ell = fld_.ell();
  std::vector<u64> v = c.vec;
  for (auto& x : v) x %= m;
  u64 konst = c.konst % fld_.q();
  for (size_t i = 0; i < rows_.size(); ++i) {
    size_t col = static_cast<size_t>(pivot_cols_[i]);
    u64 e = v[col];
    if (e == 0) continue;
    int ve = val_mod(e, ell, fld_.n());
    if (ve < pivot_vals_[i]) return false;
    u64 f = e / ipow_u64(ell, static_cast<unsigned>(pivot_vals_[i]));
    for (size_t j = 0; j < width_; ++j) {
      u64 t = mulmod(f % m, rows_[i].vec[j], m);
      v[j] = v[j] >= t ? v[j] - t : v[j] + m - t;
    }
    konst = fld_.mul(konst, fld_.pow(rows_[i].konst, m - (f % m) == m ? 0 : m - (f % m)));
  }
  if (!vec_zero(v)) return false;
  return fld_.pow(konst, ipow_u64(ell, static_cast<unsigned>(const_level_))) == 1;
}

KummerSubgroup KummerSubgroup::join(const KummerSubgroup& other) const {
  if (!(fld_ == other.fld_) || width_ != other.width_)
    throw domain_error("join of subgroups over different instances");
  std::vector<KummerClass> gens = rows_;
  gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
  if (const_level_ > 0) {
    KummerClass k = class_identity(width_);
    k.konst = const_gen_;
    gens.push_back(k);
  }
  if (other.const_level_ > 0) {
    KummerClass k = class_identity(width_);
    k.konst = other.const_gen_;
    gens.push_back(k);
  }
  return span(fld_, std::move(gens));
}

u128 KummerSubgroup::order() const {
  u128 r = 1;
  for (int i = 0; i < order_exp_; ++i) {
    if (r > (((u128)1) << 120)) throw domain_error("subgroup order overflows");
    r *= fld_.ell();
  }
  return r;
}

std::string KummerSubgroup::canonical_key() const {
  std::ostringstream os;
  os << width_ << '/' << fld_.ell() << '^' << fld_.n() << ':';
  for (size_t i = 0; i < rows_.size(); ++i) {
    os << pivot_cols_[i] << '^' << pivot_vals_[i] << '[';
    for (u64 x : rows_[i].vec) os << x << ',';
    os << ']' << canon_konst_[i] << ';';
  }
  os << '|' << const_level_;
  return os.str();
}

std::vector<KummerClass> KummerSubgroup::elements(size_t cap) const {
  if (order_exp_ > 60 || order() > cap) throw domain_error("subgroup too large to enumerate");
  std::vector<KummerClass> out{class_identity(width_)};
  auto extend = [&](const KummerClass& gen, u64 ord) {
    std::vector<KummerClass> next;
    next.reserve(out.size() * ord);
    KummerClass acc = class_identity(width_);
    for (u64 e = 0; e < ord; ++e) {
      for (const auto& base : out) next.push_back(class_mul(fld_, base, acc));
      acc = class_mul(fld_, acc, gen);
    }
    out = std::move(next);
  };
  for (size_t i = 0; i < rows_.size(); ++i)
    extend(rows_[i], ipow_u64(fld_.ell(), static_cast<unsigned>(fld_.n() - pivot_vals_[i])));
  if (const_level_ > 0) {
    KummerClass k = class_identity(width_);
    k.konst = const_gen_;
    extend(k, ipow_u64(fld_.ell(), static_cast<unsigned>(const_level_)));
  }
  return out;
}

u64 subgroup_ram(const PrimeField& fld, std::span<const PrimeLabel> primes,
                 const std::vector<RadicalField>& gens, const KummerSubgroup& group,
                 int place) {
  // path 1: lcm over the generator fields (Abhyankar for tame composita)
  u64 lcm = 1;
  for (const auto& f : gens) {
    u64 e = place == kInfinitePlace ? ram_index_infinity(fld, primes, f)
                                    : ram_index_finite(fld, f, static_cast<size_t>(place));
    lcm = std::max(lcm, e);  // all are powers of the same ell
  }
  // path 2: order of the valuation image of the subgroup
  int minval = fld.n();
  for (const auto& row : group.rows()) {
    u64 img;
    if (place == kInfinitePlace) {
      i128 s = 0;
      for (size_t j = 0; j < primes.size(); ++j) s += (i128)row.vec[j] * primes[j].degree;
      img = mod_i128(s, fld.ell_n());
    } else {
      img = row.vec[static_cast<size_t>(place)];
    }
    if (img != 0) minval = std::min(minval, nu_ell((i128)img, fld.ell()));
  }
  u64 image_order = fld.ell_pow(fld.n() - minval);
  if (lcm != image_order)
    throw internal_error("ramification paths disagree: lcm=" + std::to_string(lcm) +
                         " image=" + std::to_string(image_order));
  return lcm;
}

}  // namespace kummer
