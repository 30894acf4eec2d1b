#include <doctest.h>

#include "kummer/json_io.hpp"

using namespace kummer;

TEST_CASE("integer emission straddles the 53-bit safety line") {
  CHECK(json_int(5).is_number());
  CHECK(json_int(-(i128)70848).is_number());
  i128 big = (i128)1 << 60;
  CHECK(json_int(big).is_string());
  CHECK(int_from_json(json_int(big), "x") == big);
  CHECK(int_from_json(ordered_json(42), "x") == 42);
  CHECK(int_from_json(ordered_json("-1312"), "x") == -1312);
  CHECK_THROWS_AS(int_from_json(ordered_json("12x"), "x"), domain_error);
  CHECK_THROWS_AS(int_from_json(ordered_json(1.5), "x"), domain_error);
}

TEST_CASE("instance files: factored, abstract, and coefficient forms") {
  ordered_json factored = ordered_json::parse(R"({
    "q": 19, "ell": 3, "n": 2, "gamma": 2,
    "D": { "factors": [
      { "prime": { "degree": 1 }, "exponent": 1 },
      { "prime": { "coeffs": "2,1" }, "exponent": 3 }
    ]}
  })");
  GenusInstance inst = instance_from_json(factored);
  CHECK(inst.r() == 2);
  CHECK(inst.primes[0].a == 0);
  CHECK(inst.primes[1].a == 1);
  CHECK(inst.primes[1].label.concrete.has_value());

  ordered_json coeffs = ordered_json::parse(R"({
    "q": 13, "ell": 3, "n": 1, "gamma": 1,
    "D": { "coeffs": "2,3,1" }
  })");
  GenusInstance quad = instance_from_json(coeffs);
  CHECK(quad.r() == 2);  // (T+1)(T+2)
  CHECK(quad.deg_d == 2);

  ordered_json both = ordered_json::parse(R"({
    "q": 13, "ell": 3, "n": 1, "gamma": 1,
    "D": { "coeffs": "2,3,1", "factors": [] }
  })");
  CHECK_THROWS_AS(instance_from_json(both), domain_error);
  ordered_json neither = ordered_json::parse(R"({
    "q": 13, "ell": 3, "n": 1, "gamma": 1, "D": {}
  })");
  CHECK_THROWS_AS(instance_from_json(neither), domain_error);
  ordered_json missing = ordered_json::parse(R"({ "q": 13 })");
  CHECK_THROWS_AS(instance_from_json(missing), domain_error);
}

TEST_CASE("certificate round trip") {
  ordered_json file = ordered_json::parse(R"({
    "q": 19, "ell": 3, "n": 2, "gamma": 2,
    "D": { "factors": [
      { "prime": { "degree": 1 }, "exponent": 1 },
      { "prime": { "degree": 3 }, "exponent": 2 }
    ]}
  })");
  GenusInstance inst = instance_from_json(file);
  GenusCertificate cert = genus_field(inst);
  auto checks = check_certificate(cert);
  ordered_json j = certificate_to_json(cert, checks);

  // field names fixed by the interface
  for (const char* key : {"instance", "degD", "nu", "t", "m", "i0", "d", "bezout", "z", "y",
                          "alpha", "E_gex", "E_ge", "K_ge", "checks"})
    CHECK(j.contains(key));

  GenusCertificate back = certificate_from_json(j);
  CHECK(certificate_to_json(back).dump() == certificate_to_json(cert).dump());
  CHECK(generator_span(inst.fld, back.k_ge) == generator_span(inst.fld, cert.k_ge));
  CHECK(all_pass(check_certificate(back)));
}

TEST_CASE("radical serialization is sparse and typed") {
  PrimeField fld(19, 3, 2);
  RadicalField f;
  f.root_exp = 2;
  f.const_part = 18;
  f.exps = {0, 5, 0};
  ordered_json j = radical_to_json(fld, f);
  CHECK(j["root_order"] == 9);
  CHECK(j["const_part"] == 18);
  REQUIRE(j["exponents"].size() == 1);
  CHECK(j["exponents"][0][0] == 2);
  CHECK(j["exponents"][0][1] == 5);
  RadicalField back = radical_from_json(fld, 3, j);
  CHECK(back.root_exp == 2);
  CHECK(back.exps == f.exps);
  CHECK(back.const_part == 18);
  ordered_json bad = j;
  bad["root_order"] = 8;
  CHECK_THROWS_AS(radical_from_json(fld, 3, bad), domain_error);
}

TEST_CASE("certificates with concrete primes round trip") {
  ordered_json file = ordered_json::parse(R"({
    "q": 13, "ell": 3, "n": 1, "gamma": 2,
    "D": { "coeffs": "2,3,1" }
  })");
  GenusInstance inst = instance_from_json(file);
  REQUIRE(inst.primes[0].label.concrete.has_value());
  GenusCertificate cert = genus_field(inst);
  ordered_json j = certificate_to_json(cert);
  CHECK(j["instance"]["primes"][0].contains("coeffs"));
  GenusCertificate back = certificate_from_json(j);
  REQUIRE(back.inst.primes[0].label.concrete.has_value());
  CHECK(certificate_to_json(back).dump() == j.dump());
  CHECK(all_pass(check_certificate(back)));
}
