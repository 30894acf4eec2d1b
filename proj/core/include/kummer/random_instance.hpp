#pragma once

#include <random>

#include "kummer/instance.hpp"

namespace kummer {

struct RandomParams {
  u64 q = 13;
  u64 ell = 3;
  int n = 1;
  int max_r = 3;
  i64 max_deg = 6;
  bool concrete = false;  // draw actual monic irreducibles instead of degrees
};

/// Reproducible random instance: r in [1, max_r], degrees in [1, max_deg],
/// multiplicities in [1, ell^n - 1] with at least one coprime to ell
/// (the ordering hypothesis a_1 = 0), gamma uniform in F_q^*.
GenusInstance random_instance(std::mt19937_64& rng, const RandomParams& params);

Poly random_monic(std::mt19937_64& rng, u64 q, i64 deg);
Poly random_monic_irreducible(std::mt19937_64& rng, u64 q, i64 deg);

}  // namespace kummer
