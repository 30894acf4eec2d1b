#include "kummer/oracle.hpp"

#include <map>

namespace kummer {

namespace {

struct Admissibility {
  std::vector<u64> e_finite;  // e_P_j(E)
  u64 e_inf = 1;              // e_inf(E) = ell^t
};

bool admissible(const PrimeField& fld, std::span<const PrimeLabel> primes,
                const KummerSubgroup& s, const Admissibility& want) {
  // valuation-image ramification of the spanned subgroup at each place
  auto image_ram = [&](int place) {
    int minval = fld.n();
    for (const auto& row : s.rows()) {
      u64 img;
      if (place == kInfinitePlace) {
        i128 acc = 0;
        for (size_t j = 0; j < primes.size(); ++j) acc += (i128)row.vec[j] * primes[j].degree;
        img = mod_i128(acc, fld.ell_n());
      } else {
        img = row.vec[static_cast<size_t>(place)];
      }
      if (img != 0) minval = std::min(minval, nu_ell((i128)img, fld.ell()));
    }
    return fld.ell_pow(fld.n() - minval);
  };
  for (size_t j = 0; j < primes.size(); ++j)
    if (image_ram(static_cast<int>(j)) != want.e_finite[j]) return false;
  return image_ram(kInfinitePlace) == want.e_inf;
}

}  // namespace

OracleResult oracle_genus(const GenusInstance& inst, const OracleLimits& limits) {
  const auto& fld = inst.fld;
  auto labels = inst.labels();
  std::span<const PrimeLabel> primes(labels);

  auto narrow = narrow_genus(inst);
  KummerSubgroup full = KummerSubgroup::span_radicals(fld, narrow);
  if (full.order_exp() > 40)
    throw oracle_limit_error("instance too large for oracle (group order ell^" +
                             std::to_string(full.order_exp()) + ")");
  std::vector<KummerClass> elements;
  try {
    elements = full.elements(limits.max_elements);
  } catch (const domain_error&) {
    throw oracle_limit_error("instance too large for oracle (more than " +
                             std::to_string(limits.max_elements) + " elements)");
  }

  Admissibility want;
  want.e_inf = fld.ell_pow(fld.n() - std::min(fld.n(), inst.nu));
  for (const auto& p : inst.primes) want.e_finite.push_back(fld.ell_pow(fld.n() - p.a));

  KummerClass e_class = to_class(fld, inst.e_radical());
  KummerSubgroup base = KummerSubgroup::span(fld, {e_class});
  if (!admissible(fld, primes, base, want))
    throw internal_error("oracle: <class(E)> itself is not admissible");

  OracleResult out{base};
  out.elements_scanned = elements.size();
  for (const auto& g : elements) {
    if (out.group.contains(g)) continue;
    KummerSubgroup single = KummerSubgroup::span(fld, {e_class, g});
    if (admissible(fld, primes, single, want)) out.group = out.group.join(single);
  }
  // joins of admissible subgroups stay admissible; certify, then certify
  // that no admissible one-generator extension was missed
  if (!admissible(fld, primes, out.group, want))
    throw internal_error("oracle: join of admissible subgroups is not admissible");
  for (const auto& g : elements) {
    KummerSubgroup single = KummerSubgroup::span(fld, {e_class, g});
    if (admissible(fld, primes, single, want) && !out.group.contains(g))
      throw internal_error("oracle: join pass missed an admissible extension");
  }

  if (elements.size() <= limits.lattice_cap) {
    // literal exhaustive pass over the subgroup lattice [<class(E)>, full]
    std::map<std::string, KummerSubgroup> seen;
    std::vector<KummerSubgroup> queue{base};
    seen.emplace(base.canonical_key(), base);
    size_t qi = 0;
    while (qi < queue.size()) {
      KummerSubgroup s = queue[qi++];
      for (const auto& g : elements) {
        if (s.contains(g)) continue;
        KummerSubgroup ext = s.join(KummerSubgroup::span(fld, {g}));
        auto key = ext.canonical_key();
        if (seen.emplace(key, ext).second) {
          if (seen.size() > limits.max_subgroups)
            throw oracle_limit_error("subgroup lattice exceeds cap");
          queue.push_back(std::move(ext));
        }
      }
    }
    const KummerSubgroup* best = nullptr;
    for (const auto& [key, s] : seen) {
      if (!admissible(fld, primes, s, want)) continue;
      if (!best || s.order_exp() > best->order_exp()) best = &s;
    }
    if (!best) throw internal_error("oracle lattice: no admissible subgroup");
    // unique maximal: every admissible subgroup must sit inside it
    for (const auto& [key, s] : seen) {
      if (!admissible(fld, primes, s, want)) continue;
      for (const auto& row : s.rows())
        if (!best->contains(row)) throw internal_error("oracle lattice: maximal not unique");
    }
    if (!(*best == out.group)) throw internal_error("oracle lattice disagrees with join pass");
    out.lattice_checked = true;
  }
  return out;
}

}  // namespace kummer
