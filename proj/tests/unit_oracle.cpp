#include <doctest.h>

#include "kummer/checks.hpp"
#include "kummer/oracle.hpp"

using namespace kummer;

namespace {

GenusInstance abstract_instance(u64 q, u64 ell, int n, u64 gamma,
                                std::vector<std::pair<i64, i64>> deg_alpha) {
  PrimeField fld(q, ell, n);
  std::vector<std::pair<PrimeSpec, i64>> factors;
  for (auto [deg, alpha] : deg_alpha) factors.emplace_back(deg, alpha);
  return build_instance(fld, gamma, factors);
}

}  // namespace

TEST_CASE("oracle equals the construction on small hand-picked cases") {
  // ell=3, n=1, q=13, degrees 1 and 2
  GenusInstance a = abstract_instance(13, 3, 1, 1, {{1, 1}, {2, 1}});
  OracleResult ra = oracle_genus(a);
  CHECK(ra.lattice_checked);
  CHECK(generator_span(a.fld, cyclotomic_genus(a).e_ge) == ra.group);

  // ell=2, n=2, q=13, degrees {1,2}, alpha {1,3}
  GenusInstance b = abstract_instance(13, 2, 2, 1, {{1, 1}, {2, 3}});
  OracleResult rb = oracle_genus(b);
  CHECK(rb.lattice_checked);
  CHECK(generator_span(b.fld, cyclotomic_genus(b).e_ge) == rb.group);
}

TEST_CASE("r = 1 gives the full narrow group back") {
  GenusInstance one = abstract_instance(19, 3, 2, 1, {{5, 3}});
  OracleResult r = oracle_genus(one);
  CHECK(r.group == KummerSubgroup::span_radicals(one.fld, narrow_genus(one)));
  InfinityProfile sel = select_i0(one);
  CHECK(sel.m == sel.t);
}

TEST_CASE("oracle refuses oversized instances") {
  CHECK_THROWS_AS(oracle_genus(golden_example_instance()), oracle_limit_error);
  OracleLimits tight;
  tight.max_elements = 2;
  CHECK_THROWS_AS(oracle_genus(abstract_instance(13, 3, 1, 1, {{1, 1}, {2, 1}}), tight),
                  oracle_limit_error);
}

TEST_CASE("oracle agrees when every multiplicity is divisible by ell") {
  // a_1 > 0 sits outside the stated ordering hypothesis; the narrow-genus
  // layer still matches the exhaustive search
  GenusInstance g = abstract_instance(13, 2, 2, 1, {{1, 2}, {3, 2}});
  CHECK(generator_span(g.fld, cyclotomic_genus(g).e_ge) == oracle_genus(g).group);
}

TEST_CASE("oracle agreement for ell = 5") {
  GenusInstance a = abstract_instance(31, 5, 1, 1, {{1, 2}, {3, 1}});
  CHECK(generator_span(a.fld, cyclotomic_genus(a).e_ge) == oracle_genus(a).group);
  GenusInstance b = abstract_instance(31, 5, 1, 1, {{5, 4}, {2, 3}, {10, 1}});
  CHECK(generator_span(b.fld, cyclotomic_genus(b).e_ge) == oracle_genus(b).group);
}
