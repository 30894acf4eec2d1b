#include "kummer/random_instance.hpp"

#include <algorithm>

namespace kummer {

Poly random_monic(std::mt19937_64& rng, u64 q, i64 deg) {
  if (deg < 0) throw domain_error("random_monic needs deg >= 0");
  std::vector<u64> c(static_cast<size_t>(deg) + 1);
  std::uniform_int_distribution<u64> dist(0, q - 1);
  for (size_t i = 0; i + 1 < c.size(); ++i) c[i] = dist(rng);
  c.back() = 1;
  return Poly(q, std::move(c));
}

Poly random_monic_irreducible(std::mt19937_64& rng, u64 q, i64 deg) {
  if (deg < 1) throw domain_error("irreducible degree must be >= 1");
  // density of irreducibles among monics of degree d is about 1/d
  for (int tries = 0; tries < 20000; ++tries) {
    Poly p = random_monic(rng, q, deg);
    if (is_irreducible(p)) return p;
  }
  throw internal_error("failed to draw an irreducible polynomial");
}

GenusInstance random_instance(std::mt19937_64& rng, const RandomParams& params) {
  PrimeField fld(params.q, params.ell, params.n);
  std::uniform_int_distribution<int> r_dist(1, params.max_r);
  std::uniform_int_distribution<i64> deg_dist(1, params.max_deg);
  std::uniform_int_distribution<u64> mult_dist(1, fld.ell_n() - 1);
  std::uniform_int_distribution<u64> gamma_dist(1, params.q - 1);

  const int r = r_dist(rng);
  std::vector<std::pair<PrimeSpec, i64>> factors;
  std::vector<Poly> used;
  for (int j = 0; j < r; ++j) {
    i64 mult = static_cast<i64>(mult_dist(rng));
    if (j == 0) {
      // theorem ordering starts at a_1 = 0: force one multiplicity coprime to ell
      while (mult % static_cast<i64>(params.ell) == 0) mult = static_cast<i64>(mult_dist(rng));
    }
    if (params.concrete) {
      Poly p = random_monic_irreducible(rng, params.q, deg_dist(rng));
      while (std::find(used.begin(), used.end(), p) != used.end())
        p = random_monic_irreducible(rng, params.q, deg_dist(rng));
      used.push_back(p);
      factors.emplace_back(p, mult);
    } else {
      factors.emplace_back(deg_dist(rng), mult);
    }
  }
  return build_instance(fld, gamma_dist(rng), factors);
}

}  // namespace kummer
