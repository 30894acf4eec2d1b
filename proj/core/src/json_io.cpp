#include "kummer/json_io.hpp"

namespace kummer {

namespace {

constexpr i128 kJsonSafe = (i128)1 << 53;

u64 u64_from_json(const ordered_json& j, const std::string& what) {
  i128 v = int_from_json(j, what);
  if (v < 0 || v > (i128)UINT64_MAX) throw domain_error(what + " out of range");
  return static_cast<u64>(v);
}

int int_field(const ordered_json& j, const std::string& key) {
  if (!j.contains(key)) throw domain_error("certificate missing field '" + key + "'");
  i128 v = int_from_json(j.at(key), key);
  if (v < INT32_MIN || v > INT32_MAX) throw domain_error(key + " out of range");
  return static_cast<int>(v);
}

}  // namespace

ordered_json json_int(i128 x) {
  if (x > -kJsonSafe && x < kJsonSafe) return ordered_json(static_cast<std::int64_t>(x));
  return ordered_json(dec_string(x));
}

i128 int_from_json(const ordered_json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return (i128)j.get<std::uint64_t>();
    return (i128)j.get<std::int64_t>();
  }
  if (j.is_string()) return parse_i128(j.get<std::string>());
  throw domain_error(what + ": expected integer or decimal string");
}

ordered_json radical_to_json(const PrimeField& fld, const RadicalField& f) {
  ordered_json out;
  out["root_order"] = json_int((i128)fld.ell_pow(f.root_exp));
  out["const_part"] = json_int((i128)f.const_part);
  ordered_json exps = ordered_json::array();
  for (size_t j = 0; j < f.exps.size(); ++j) {
    if (f.exps[j] == 0) continue;
    exps.push_back(ordered_json::array({json_int((i128)(j + 1)), json_int(f.exps[j])}));
  }
  out["exponents"] = std::move(exps);
  return out;
}

RadicalField radical_from_json(const PrimeField& fld, size_t r, const ordered_json& j) {
  RadicalField f;
  u64 root = u64_from_json(j.at("root_order"), "root_order");
  int s = 0;
  u64 acc = 1;
  while (acc < root) {
    acc *= fld.ell();
    ++s;
  }
  if (acc != root) throw domain_error("root_order is not a power of ell");
  if (s > fld.n()) throw domain_error("root_order exceeds ell^n");
  f.root_exp = s;
  f.const_part = u64_from_json(j.at("const_part"), "const_part");
  f.exps.assign(r, 0);
  for (const auto& pair : j.at("exponents")) {
    if (!pair.is_array() || pair.size() != 2) throw domain_error("bad exponent entry");
    i128 idx = int_from_json(pair[0], "prime_index");
    if (idx < 1 || idx > (i128)r) throw domain_error("prime_index out of range");
    f.exps[static_cast<size_t>(idx) - 1] = int_from_json(pair[1], "exponent");
  }
  return f;
}

ordered_json instance_to_json(const GenusInstance& inst) {
  ordered_json out;
  out["q"] = json_int((i128)inst.fld.q());
  out["ell"] = json_int((i128)inst.fld.ell());
  out["n"] = inst.fld.n();
  out["gamma"] = json_int((i128)inst.gamma);
  ordered_json primes = ordered_json::array();
  for (const auto& p : inst.primes) {
    ordered_json jp;
    jp["index"] = p.label.index;
    jp["degree"] = json_int((i128)p.label.degree);
    if (p.label.concrete) jp["coeffs"] = to_coeff_string(*p.label.concrete);
    jp["exponent"] = json_int((i128)p.alpha);
    jp["a"] = p.a;
    jp["b"] = json_int((i128)p.b);
    jp["c"] = json_int((i128)p.c);
    jp["d"] = p.d;
    primes.push_back(std::move(jp));
  }
  out["primes"] = std::move(primes);
  if (!inst.warnings.empty()) out["warnings"] = inst.warnings;
  return out;
}

GenusInstance instance_from_json(const ordered_json& j, u64 factor_seed) {
  for (const char* key : {"q", "ell", "n", "gamma"})
    if (!j.contains(key)) throw domain_error(std::string("instance missing field '") + key + "'");
  PrimeField fld(u64_from_json(j.at("q"), "q"), u64_from_json(j.at("ell"), "ell"),
                 int_field(j, "n"));
  u64 gamma = u64_from_json(j.at("gamma"), "gamma");

  if (j.contains("primes")) {
    // certificate-style instance block
    std::vector<std::pair<PrimeSpec, i64>> factors;
    for (const auto& jp : j.at("primes")) {
      i64 mult = static_cast<i64>(int_from_json(jp.at("exponent"), "exponent"));
      if (jp.contains("coeffs"))
        factors.emplace_back(poly_from_coeff_string(fld.q(), jp.at("coeffs").get<std::string>()),
                             mult);
      else
        factors.emplace_back(static_cast<i64>(int_from_json(jp.at("degree"), "degree")), mult);
    }
    return build_instance(fld, gamma, factors);
  }

  if (!j.contains("D")) throw domain_error("instance missing field 'D'");
  const auto& d = j.at("D");
  bool has_coeffs = d.contains("coeffs");
  bool has_factors = d.contains("factors");
  if (has_coeffs == has_factors)
    throw domain_error("D must contain exactly one of 'coeffs' or 'factors'");
  if (has_coeffs) {
    Poly poly = d.at("coeffs").is_string()
                    ? poly_from_coeff_string(fld.q(), d.at("coeffs").get<std::string>())
                    : [&] {
                        std::vector<u64> c;
                        for (const auto& x : d.at("coeffs"))
                          c.push_back(mod_i128(int_from_json(x, "coeff"), fld.q()));
                        return Poly(fld.q(), std::move(c));
                      }();
    return build_instance(fld, gamma, poly, factor_seed);
  }
  std::vector<std::pair<PrimeSpec, i64>> factors;
  for (const auto& jf : d.at("factors")) {
    if (!jf.contains("prime") || !jf.contains("exponent"))
      throw domain_error("factor entries need 'prime' and 'exponent'");
    i64 mult = static_cast<i64>(int_from_json(jf.at("exponent"), "exponent"));
    const auto& prime = jf.at("prime");
    if (prime.contains("coeffs"))
      factors.emplace_back(poly_from_coeff_string(fld.q(), prime.at("coeffs").get<std::string>()),
                           mult);
    else if (prime.contains("degree"))
      factors.emplace_back(static_cast<i64>(int_from_json(prime.at("degree"), "degree")), mult);
    else
      throw domain_error("prime entries need 'coeffs' or 'degree'");
  }
  return build_instance(fld, gamma, factors);
}

namespace {

ordered_json generators_to_json(const PrimeField& fld, const std::vector<Generator>& gens) {
  ordered_json out = ordered_json::array();
  for (const auto& g : gens) {
    ordered_json jg;
    jg["j"] = g.j;
    jg["role"] = g.role;
    jg["raw"] = radical_to_json(fld, g.raw);
    jg["canonical"] = radical_to_json(fld, g.canonical);
    out.push_back(std::move(jg));
  }
  return out;
}

std::vector<Generator> generators_from_json(const PrimeField& fld, size_t r,
                                            const ordered_json& j) {
  std::vector<Generator> out;
  for (const auto& jg : j) {
    Generator g;
    g.j = int_field(jg, "j");
    g.role = jg.at("role").get<std::string>();
    g.raw = radical_from_json(fld, r, jg.at("raw"));
    g.canonical = radical_from_json(fld, r, jg.at("canonical"));
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

ordered_json reports_to_json(const std::vector<CheckReport>& reports) {
  ordered_json out = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json jr;
    jr["name"] = r.name;
    jr["status"] = r.pass ? "pass" : "fail";
    jr["details"] = r.details;
    out.push_back(std::move(jr));
  }
  return out;
}

ordered_json certificate_to_json(const GenusCertificate& cert,
                                 const std::vector<CheckReport>& checks) {
  const auto& fld = cert.inst.fld;
  ordered_json out;
  out["instance"] = instance_to_json(cert.inst);
  out["degD"] = json_int((i128)cert.deg_d);
  out["nu"] = cert.nu;
  out["t"] = cert.sel.t;
  out["m"] = cert.sel.m;
  out["i0"] = cert.sel.i0;
  out["d"] = cert.d;
  if (cert.bezout) {
    ordered_json jb;
    jb["a"] = json_int(cert.bezout->a);
    jb["b"] = json_int(cert.bezout->b);
    out["bezout"] = std::move(jb);
  } else {
    out["bezout"] = nullptr;
  }
  ordered_json jz = ordered_json::object();
  for (const auto& [j, z] : cert.z) jz[std::to_string(j)] = json_int(z);
  out["z"] = std::move(jz);
  ordered_json jy = ordered_json::object();
  for (const auto& [j, y] : cert.y) jy[std::to_string(j)] = json_int((i128)y);
  out["y"] = std::move(jy);
  out["alpha"] = cert.alpha;
  out["eps"] = json_int((i128)cert.eps);
  out["eps_level"] = cert.eps_level;
  out["f_infinity"] = json_int((i128)fld.ell_pow(cert.f_exp));
  out["E_gex"] = generators_to_json(fld, cert.e_gex);
  out["E_ge"] = generators_to_json(fld, cert.e_ge);
  out["K_ge"] = generators_to_json(fld, cert.k_ge);
  out["checks"] = reports_to_json(checks);
  return out;
}

GenusCertificate certificate_from_json(const ordered_json& j) {
  GenusCertificate cert{instance_from_json(j.at("instance"))};
  const auto& fld = cert.inst.fld;
  i128 degd = int_from_json(j.at("degD"), "degD");
  if (degd < 0) throw domain_error("degD must be nonnegative");
  cert.deg_d = (u128)degd;
  cert.nu = int_field(j, "nu");
  cert.sel.t = int_field(j, "t");
  cert.sel.m = int_field(j, "m");
  cert.sel.i0 = int_field(j, "i0");
  cert.d = int_field(j, "d");
  if (j.contains("bezout") && !j.at("bezout").is_null()) {
    BezoutPair bez;
    bez.a = int_from_json(j.at("bezout").at("a"), "bezout.a");
    bez.b = int_from_json(j.at("bezout").at("b"), "bezout.b");
    cert.bezout = bez;
  }
  for (const auto& [key, val] : j.at("z").items())
    cert.z[std::stoi(key)] = int_from_json(val, "z");
  for (const auto& [key, val] : j.at("y").items())
    cert.y[std::stoi(key)] = static_cast<i64>(int_from_json(val, "y"));
  cert.alpha = int_field(j, "alpha");
  cert.eps = cert.inst.eps();
  cert.eps_level = fld.lpower_level(cert.eps);
  cert.f_exp = std::max(0, cert.d - cert.eps_level);
  size_t r = cert.inst.r();
  cert.e_gex = generators_from_json(fld, r, j.at("E_gex"));
  cert.e_ge = generators_from_json(fld, r, j.at("E_ge"));
  cert.k_ge = generators_from_json(fld, r, j.at("K_ge"));
  return cert;
}

}  // namespace kummer
