#pragma once

#include "kummer/genus.hpp"

namespace kummer {

struct oracle_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  size_t max_elements = 4096;     // cap on |E_gex group|
  size_t lattice_cap = 512;       // run the full subgroup-lattice pass below this
  size_t max_subgroups = 8192;
};

struct OracleResult {
  KummerSubgroup group;            // the maximal admissible subgroup
  size_t elements_scanned = 0;
  bool lattice_checked = false;    // full subgroup-lattice pass also ran
};

/// Recomputes the genus field of E independently of the generator formulas:
/// the unique maximal subgroup S of the narrow-genus Kummer group with
/// class(E) in S, e_P(S) = e_P(E) at every P | D and e_inf(S) = e_inf(E).
/// Admissibility is inherited by subgroups containing class(E) and preserved
/// under joins, so the maximum is the join of all admissible one-generator
/// extensions; every element of the group is scanned. Below lattice_cap the
/// full subgroup lattice between <class(E)> and the group is enumerated as
/// well and must give the same answer.
OracleResult oracle_genus(const GenusInstance& inst, const OracleLimits& limits = {});

}  // namespace kummer
