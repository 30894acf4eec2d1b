#include "kummer/genus.hpp"

#include <algorithm>

namespace kummer {

namespace {

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw domain_error("exponent overflows 128 bits");
  return r;
}

i128 ell_pow_i128(u64 ell, int e) {
  i128 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, (i128)ell);
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  i128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    i128 r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw internal_error("inverse of non-unit");
  return mod_i128(s0, m);
}

u64 star_sign(const PrimeField& fld, i64 degree) {
  return degree % 2 == 0 ? 1 : fld.minus_one();
}

RadicalField e_generator(const GenusInstance& inst, size_t pos) {
  const auto& p = inst.primes[pos];
  RadicalField f;
  f.root_exp = inst.fld.n() - p.a;
  f.const_part = star_sign(inst.fld, p.label.degree);
  f.exps.assign(inst.r(), 0);
  f.exps[pos] = 1;
  return f;
}

Generator make_generator(const GenusInstance& inst, int j, RadicalField raw, std::string role) {
  Generator g;
  g.j = j;
  g.canonical = canonicalize(inst.fld, raw);
  g.raw = std::move(raw);
  g.role = std::move(role);
  return g;
}

void validate_bezout(const GenusInstance& inst, int i0, const BezoutPair& bez) {
  const auto& p = inst.primes.at(static_cast<size_t>(i0) - 1);
  i128 lhs = checked_mul(bez.a, (i128)p.label.degree) +
             checked_mul(bez.b, ell_pow_i128(inst.fld.ell(), inst.fld.n()));
  if (lhs != ell_pow_i128(inst.fld.ell(), p.d))
    throw domain_error("bezout pair does not satisfy a deg P_i0 + b ell^n = ell^d_i0");
  if (bez.a % (i128)inst.fld.ell() == 0) throw domain_error("bezout a must be coprime to ell");
}

// The four-case table. Returns generators for every j != i0 plus, as the
// last element, the i0 entry k(ell^(d_i0 + t)-th root of P_i0*).
struct KnorrTable {
  std::map<int, i128> z;
  std::map<int, i64> y;
  std::vector<Generator> f;  // indexed j = 1..r in order, i0 entry included
};

KnorrTable knorr_generators(const GenusInstance& inst, const InfinityProfile& sel,
                            const BezoutPair& bez, bool i0_overridden) {
  KnorrTable out;
  const auto& fld = inst.fld;
  const int n = fld.n();
  const size_t i0 = static_cast<size_t>(sel.i0) - 1;
  const auto& pi0 = inst.primes[i0];
  const u64 ell_n = fld.ell_n();
  const u64 ci0_inv = inv_mod(mod_i128(pi0.c, ell_n), ell_n);

  auto fail = [&](const std::string& msg) -> void {
    if (i0_overridden) throw domain_error("i0 override invalid: " + msg);
    throw internal_error(msg);
  };

  for (size_t j = 0; j < inst.r(); ++j) {
    const auto& pj = inst.primes[j];
    if (j == i0) {
      RadicalField f;
      f.root_exp = pi0.d + sel.t;
      f.const_part = star_sign(fld, pi0.label.degree);
      f.exps.assign(inst.r(), 0);
      f.exps[i0] = 1;
      out.f.push_back(make_generator(inst, pj.label.index, std::move(f), "F_i0"));
      continue;
    }
    RadicalField f;
    f.exps.assign(inst.r(), 0);
    f.const_part = 1;
    if (j < i0) {
      if (pj.d < pi0.d) fail("d_j < d_i0 for j < i0");
      i128 zj = checked_mul(checked_mul(-bez.a, (i128)pj.c), ell_pow_i128(fld.ell(), pj.d - pi0.d));
      out.z[pj.label.index] = zj;
      f.root_exp = n - pj.a;
      f.exps[j] = 1;
      f.exps[i0] = zj;
      out.f.push_back(make_generator(inst, pj.label.index, std::move(f), "F_j (j<i0)"));
    } else if (pj.d >= pi0.d) {
      u64 yj = mod_i128(-(i128)pj.c * (i128)ci0_inv, ell_n);
      out.y[pj.label.index] = static_cast<i64>(yj);
      f.root_exp = n - pj.a;
      f.exps[j] = 1;
      f.exps[i0] = checked_mul((i128)yj, ell_pow_i128(fld.ell(), pj.d - pi0.d));
      out.f.push_back(make_generator(inst, pj.label.index, std::move(f), "F_j (j>i0, d_j>=d_i0)"));
    } else {
      u64 yj = mod_i128(-(i128)pj.c * (i128)ci0_inv, ell_n);
      out.y[pj.label.index] = static_cast<i64>(yj);
      int root = n - pj.a + pi0.d - pj.d;
      if (root > n) fail("case-4 root order exceeds ell^n");
      f.root_exp = root;
      f.exps[j] = ell_pow_i128(fld.ell(), pi0.d - pj.d);
      f.exps[i0] = yj;
      out.f.push_back(make_generator(inst, pj.label.index, std::move(f), "F_j (j>i0, d_i0>d_j)"));
    }
  }
  return out;
}

}  // namespace

std::vector<RadicalField> narrow_genus(const GenusInstance& inst) {
  std::vector<RadicalField> out;
  out.reserve(inst.r());
  for (size_t j = 0; j < inst.r(); ++j) out.push_back(e_generator(inst, j));
  return out;
}

InfinityProfile select_i0(const GenusInstance& inst) {
  InfinityProfile sel;
  const int n = inst.fld.n();
  sel.t = n - std::min(n, inst.nu);
  int m = 0, i0 = 0;
  for (size_t j = 0; j < inst.r(); ++j) {
    const auto& p = inst.primes[j];
    int e = n - p.a - std::min(n - p.a, p.d);
    if (e >= m) {
      m = e;
      i0 = static_cast<int>(j) + 1;
    }
  }
  sel.m = m;
  sel.i0 = i0;
  if (sel.t > sel.m) throw internal_error("t > m");
  // the largest attaining index satisfies the strict side condition
  for (size_t j = static_cast<size_t>(i0); j < inst.r(); ++j) {
    const auto& p = inst.primes[j];
    if (m > 0 && n - p.a - p.d >= m) throw internal_error("i0 side condition violated");
  }
  return sel;
}

BezoutPair bezout_l(const GenusInstance& inst, int i0) {
  const auto& p = inst.primes.at(static_cast<size_t>(i0) - 1);
  const auto& fld = inst.fld;
  if (p.d > fld.n()) throw domain_error("gcd(deg P_i0, ell^n) != ell^(d_i0)");
  u64 modulus = fld.ell_pow(fld.n() - p.d);
  BezoutPair out;
  if (modulus == 1) {
    out.a = 1;  // degenerate: any unit works; keep a = 1
  } else {
    u64 ainv = inv_mod(mod_i128(p.c, modulus), modulus);
    out.a = ainv <= modulus / 2 ? (i128)ainv : (i128)ainv - (i128)modulus;
  }
  i128 num = ell_pow_i128(fld.ell(), p.d) - checked_mul(out.a, (i128)p.label.degree);
  i128 den = ell_pow_i128(fld.ell(), fld.n());
  if (num % den != 0) throw internal_error("bezout identity failed");
  out.b = num / den;
  return out;
}

CyclotomicResult cyclotomic_genus(const GenusInstance& inst, const GenusOptions& opts) {
  CyclotomicResult out;
  out.sel = select_i0(inst);
  if (opts.i0_override) {
    int j = *opts.i0_override;
    if (j < 1 || j > static_cast<int>(inst.r())) throw domain_error("i0 override out of range");
    const auto& p = inst.primes[static_cast<size_t>(j) - 1];
    int e = inst.fld.n() - p.a - std::min(inst.fld.n() - p.a, p.d);
    if (e != out.sel.m) throw domain_error("i0 override does not attain m");
    out.sel.i0 = j;
  }

  auto e_list = narrow_genus(inst);
  for (size_t j = 0; j < inst.r(); ++j)
    out.e_gex.push_back(make_generator(inst, static_cast<int>(j) + 1, e_list[j], "E_j"));

  if (out.sel.m == out.sel.t) {
    // Theorem's first branch: the narrow genus field is already the genus field.
    out.e_ge = out.e_gex;
    if (out.sel.m > 0) {
      BezoutPair bez = opts.bezout_override ? *opts.bezout_override : bezout_l(inst, out.sel.i0);
      validate_bezout(inst, out.sel.i0, bez);
      out.bezout = bez;
    }
    return out;
  }

  BezoutPair bez = opts.bezout_override ? *opts.bezout_override : bezout_l(inst, out.sel.i0);
  validate_bezout(inst, out.sel.i0, bez);
  out.bezout = bez;
  KnorrTable table = knorr_generators(inst, out.sel, bez, opts.i0_override.has_value());
  out.z = std::move(table.z);
  out.y = std::move(table.y);
  out.e_ge = std::move(table.f);
  return out;
}

GenusCertificate genus_field(const GenusInstance& inst, const GenusOptions& opts) {
  GenusCertificate cert{inst};
  const auto& fld = inst.fld;
  const int n = fld.n();

  CyclotomicResult cyc = cyclotomic_genus(inst, opts);
  cert.sel = cyc.sel;
  cert.bezout = cyc.bezout;
  cert.e_gex = std::move(cyc.e_gex);
  cert.e_ge = std::move(cyc.e_ge);

  cert.deg_d = inst.deg_d;
  cert.nu = inst.nu;
  cert.d = std::min(n, inst.nu);
  cert.eps = inst.eps();
  cert.eps_level = fld.lpower_level(cert.eps);
  cert.alpha = fld.alpha_exponent(cert.eps, cert.d);
  cert.f_exp = std::max(0, cert.d - cert.eps_level);

  const size_t i0 = static_cast<size_t>(cert.sel.i0) - 1;
  const auto& pi0 = inst.primes[i0];

  // Generators fixed by the decomposition group at infinity. For m > 0 the
  // four-case combinations are infinity-split by construction; for m = 0
  // every E_j already is, and alpha = 0.
  if (cert.sel.m > 0) {
    BezoutPair bez = *cert.bezout;
    KnorrTable table = knorr_generators(inst, cert.sel, bez, opts.i0_override.has_value());
    cert.z = std::move(table.z);
    cert.y = std::move(table.y);
    for (auto& g : table.f)
      if (g.j != cert.sel.i0) cert.k_ge.push_back(std::move(g));
  } else {
    if (cert.alpha != 0) throw internal_error("alpha > 0 with m = 0");
    for (size_t j = 0; j < inst.r(); ++j)
      if (j != i0)
        cert.k_ge.push_back(
            make_generator(inst, static_cast<int>(j) + 1, e_generator(inst, j), "E_j"));
  }

  int tower = std::min(n - pi0.a, pi0.d + cert.sel.t) - cert.alpha;
  if (tower < 0) throw internal_error("i0 tower root order is negative");
  if (tower > 0) {
    RadicalField f;
    f.root_exp = tower;
    f.const_part = star_sign(fld, pi0.label.degree);
    f.exps.assign(inst.r(), 0);
    f.exps[i0] = 1;
    cert.k_ge.push_back(make_generator(inst, cert.sel.i0, std::move(f), "P_i0 tower"));
  }
  cert.k_ge.push_back(make_generator(inst, 0, inst.k_radical(), "K"));
  return cert;
}

std::vector<Generator> peng_n1(const GenusInstance& inst) {
  const auto& fld = inst.fld;
  if (fld.n() != 1) throw domain_error("peng_n1 requires n = 1");

  InfinityProfile sel = select_i0(inst);
  const size_t i0 = static_cast<size_t>(sel.i0) - 1;
  int d = std::min(1, inst.nu);
  int t = 1 - d;
  int alpha = fld.alpha_exponent(inst.eps(), d);
  if (t != sel.t) throw internal_error("t mismatch");

  std::vector<Generator> out;
  if (sel.m == sel.t && alpha == 0) {
    for (size_t j = 0; j < inst.r(); ++j)
      out.push_back(make_generator(inst, static_cast<int>(j) + 1, e_generator(inst, j), "E_j"));
  } else {
    // reorder so the m-attaining prime plays the role of P_r; with n = 1
    // every a_j = 0 and d_i0 = 0, so the Bezout pair is a deg P_i0 + b ell = 1
    // and z_j = -a deg P_j throughout.
    const auto& pr = inst.primes[i0];
    if (pr.d != 0) throw internal_error("peng: d_i0 != 0 in the combination branch");
    BezoutPair bez = bezout_l(inst, sel.i0);
    for (size_t j = 0; j < inst.r(); ++j) {
      if (j == i0) continue;
      i128 zj = checked_mul(-bez.a, (i128)inst.primes[j].label.degree);
      RadicalField f;
      f.root_exp = 1;
      f.const_part = 1;
      f.exps.assign(inst.r(), 0);
      f.exps[j] = 1;
      f.exps[i0] = zj;
      out.push_back(
          make_generator(inst, inst.primes[j].label.index, std::move(f), "F_j (peng)"));
    }
  }
  out.push_back(make_generator(inst, 0, inst.k_radical(), "K"));
  return out;
}

KummerSubgroup generator_span(const PrimeField& fld, const std::vector<Generator>& gens,
                              bool canonical) {
  std::vector<RadicalField> fields;
  fields.reserve(gens.size());
  for (const auto& g : gens) fields.push_back(canonical ? g.canonical : g.raw);
  return KummerSubgroup::span_radicals(fld, fields);
}

}  // namespace kummer
