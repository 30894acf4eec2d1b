// Command-line front end: instance I/O, certificate emission, verification,
// and seeded property-test batches.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "kummer/json_io.hpp"
#include "kummer/oracle.hpp"
#include "kummer/random_instance.hpp"
#include "kummer/selftest.hpp"

namespace {

using namespace kummer;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  try {
    ordered_json j;
    in >> j;
    return j;
  } catch (const ordered_json::parse_error& e) {
    throw domain_error("cannot parse " + path + ": " + e.what());
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw domain_error("cannot write " + out_path);
  out << text << "\n";
}

std::string radical_text(const GenusInstance& inst, const RadicalField& f) {
  if (f.root_exp == 0) return "k";
  std::string s = "k( " + std::to_string(inst.fld.ell()) + "^" + std::to_string(f.root_exp) +
                  "-th root of ";
  bool any = false;
  if (f.const_part != 1) {
    s += f.const_part == inst.fld.minus_one() ? "-1" : std::to_string(f.const_part);
    any = true;
  }
  for (size_t j = 0; j < f.exps.size(); ++j) {
    if (f.exps[j] == 0) continue;
    if (any) s += " * ";
    s += "P_" + std::to_string(j + 1);
    if (f.exps[j] != 1) s += "^" + dec_string(f.exps[j]);
    any = true;
  }
  if (!any) s += "1";
  return s + " )";
}

std::string certificate_text(const GenusCertificate& cert,
                             const std::vector<CheckReport>& checks) {
  const auto& inst = cert.inst;
  std::ostringstream os;
  os << "q = " << inst.fld.q() << ", ell = " << inst.fld.ell() << ", n = " << inst.fld.n()
     << ", gamma = " << inst.gamma << "\n";
  os << "primes:\n";
  for (const auto& p : inst.primes) {
    os << "  P_" << p.label.index << ": deg = " << p.label.degree << " (c=" << p.c
       << ", d=" << p.d << "), alpha = " << p.alpha << " (b=" << p.b << ", a=" << p.a << ")";
    if (p.label.concrete) os << ", coeffs = " << to_coeff_string(*p.label.concrete);
    os << "\n";
  }
  for (const auto& w : inst.warnings) os << "  warning: " << w << "\n";
  os << "deg D = " << dec_string(cert.deg_d) << ", nu = " << cert.nu << ", t = " << cert.sel.t
     << ", m = " << cert.sel.m << ", i0 = " << cert.sel.i0 << ", d = " << cert.d
     << ", alpha = " << cert.alpha << "\n";
  if (cert.bezout)
    os << "bezout: a = " << dec_string(cert.bezout->a) << ", b = " << dec_string(cert.bezout->b)
       << "\n";
  for (const auto& [j, z] : cert.z) os << "z_" << j << " = " << dec_string(z) << "\n";
  for (const auto& [j, y] : cert.y) os << "y_" << j << " = " << y << "\n";
  auto dump = [&](const char* title, const std::vector<Generator>& gens) {
    os << title << ":\n";
    for (const auto& g : gens) {
      os << "  ";
      if (g.j > 0)
        os << "[" << g.role << "] ";
      else
        os << "[K] ";
      os << radical_text(inst, g.raw);
      if (!(g.raw.exps == g.canonical.exps && g.raw.const_part == g.canonical.const_part))
        os << "  == " << radical_text(inst, g.canonical);
      os << "\n";
    }
  };
  dump("E_gex (narrow genus field)", cert.e_gex);
  dump("E_ge (genus field of E)", cert.e_ge);
  dump("K_ge (genus field of K, compose with K)", cert.k_ge);
  if (!checks.empty()) {
    os << "checks:\n";
    for (const auto& r : checks)
      os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.name
         << (r.details.empty() ? "" : ": " + r.details) << "\n";
  }
  return os.str();
}

int cmd_compute(const std::string& path, const std::string& emit, bool verify,
                const std::string& out_path, u64 seed, const std::string& bezout_opt,
                int i0_opt) {
  GenusInstance inst = instance_from_json(load_json(path), seed);
  GenusOptions opts;
  if (!bezout_opt.empty()) {
    auto comma = bezout_opt.find(',');
    if (comma == std::string::npos)
      throw domain_error("--bezout expects 'a,b'");
    BezoutPair bez;
    bez.a = parse_i128(bezout_opt.substr(0, comma));
    bez.b = parse_i128(bezout_opt.substr(comma + 1));
    opts.bezout_override = bez;
  }
  if (i0_opt > 0) opts.i0_override = i0_opt;
  GenusCertificate cert = genus_field(inst, opts);
  std::vector<CheckReport> checks;
  if (verify) {
    checks = check_certificate(cert);
    checks.push_back(CheckReport{"certificate.recompute", true, "freshly computed"});
    checks.push_back(check_ramification_comparison(inst));
  }
  if (emit == "text")
    write_output(certificate_text(cert, checks), out_path);
  else
    write_output(certificate_to_json(cert, checks).dump(2), out_path);
  return verify && !all_pass(checks) ? kExitCheckFailed : kExitOk;
}

int cmd_verify(const std::string& path, const std::string& out_path) {
  ordered_json j = load_json(path);
  GenusCertificate stored = certificate_from_json(j);
  std::vector<CheckReport> checks = check_certificate(stored);

  // recompute from the embedded instance and insist on identical content
  CheckReport recompute{"certificate.recompute", true, ""};
  try {
    GenusOptions opts;
    if (stored.bezout) opts.bezout_override = stored.bezout;
    if (stored.sel.i0 > 0) opts.i0_override = stored.sel.i0;
    GenusCertificate fresh = genus_field(stored.inst, opts);
    ordered_json a = certificate_to_json(stored);
    ordered_json b = certificate_to_json(fresh);
    if (a != b) {
      recompute.pass = false;
      recompute.details = "stored certificate differs from recomputation";
    } else {
      recompute.details = "matches recomputation";
    }
  } catch (const std::exception& e) {
    recompute.pass = false;
    recompute.details = std::string("recompute failed: ") + e.what();
  }
  checks.push_back(std::move(recompute));
  checks.push_back(check_ramification_comparison(stored.inst));

  write_output(reports_to_json(checks).dump(2), out_path);
  return all_pass(checks) ? kExitOk : kExitCheckFailed;
}

int cmd_selftest(bool as_json, int only) {
  std::vector<CriterionResult> results;
  if (only > 0)
    results.push_back(run_criterion(only));
  else
    results = run_all_criteria();
  bool ok = true;
  if (as_json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : results) {
      ordered_json jr;
      jr["id"] = r.id;
      jr["name"] = r.name;
      jr["status"] = r.pass ? "pass" : "fail";
      jr["cases"] = r.cases;
      jr["seconds"] = r.seconds;
      jr["notes"] = r.lines;
      out.push_back(std::move(jr));
      ok = ok && r.pass;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::printf("[%s] criterion %d: %s (%ld cases, %.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.cases, r.seconds);
      for (const auto& line : r.lines) std::printf("    %s\n", line.c_str());
      ok = ok && r.pass;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_random(u64 q, u64 ell, int n, u64 seed, int trials, int max_r, i64 max_deg,
               const std::string& oracle_mode, const std::string& emit) {
  PrimeField fld(q, ell, n);  // validates the parameter set, exits 2 on failure
  (void)fld;
  std::mt19937_64 rng(seed);
  RandomParams params{q, ell, n, max_r, max_deg, false};
  int failures = 0, oracle_runs = 0, peng_runs = 0;
  ordered_json trials_json = ordered_json::array();
  for (int trial = 0; trial < trials; ++trial) {
    GenusInstance inst = random_instance(rng, params);
    ordered_json jt;
    jt["trial"] = trial;
    try {
      GenusCertificate cert = genus_field(inst);
      auto checks = check_certificate(cert);
      checks.push_back(check_ramification_comparison(inst));
      bool ok = all_pass(checks);
      if (oracle_mode != "off") {
        try {
          auto cyc = cyclotomic_genus(inst);
          auto oracle = oracle_genus(inst);
          ++oracle_runs;
          if (!(generator_span(inst.fld, cyc.e_ge) == oracle.group)) {
            ok = false;
            checks.push_back(CheckReport{"oracle.equivalence", false, "subgroups differ"});
          } else {
            checks.push_back(CheckReport{"oracle.equivalence", true, ""});
          }
        } catch (const oracle_limit_error& e) {
          if (oracle_mode == "on") throw domain_error(std::string("--oracle on: ") + e.what());
        }
      }
      if (n == 1) {
        ++peng_runs;
        bool same = generator_span(inst.fld, cert.k_ge) ==
                    generator_span(inst.fld, peng_n1(inst));
        checks.push_back(CheckReport{"peng.consistency", same, same ? "" : "subgroups differ"});
        ok = ok && same;
      }
      if (!ok) ++failures;
      jt["status"] = ok ? "pass" : "fail";
      if (!ok) jt["checks"] = reports_to_json(checks);
    } catch (const std::exception& e) {
      ++failures;
      jt["status"] = "error";
      jt["error"] = e.what();
    }
    trials_json.push_back(std::move(jt));
  }
  if (emit == "json") {
    ordered_json out;
    out["seed"] = json_int((i128)seed);
    out["trials"] = trials;
    out["failures"] = failures;
    out["oracle_runs"] = oracle_runs;
    out["peng_runs"] = peng_runs;
    out["results"] = std::move(trials_json);
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("%d trials, %d failures, %d oracle cross-checks, %d n=1 cross-checks\n", trials,
                failures, oracle_runs, peng_runs);
    for (const auto& jt : trials_json)
      if (jt["status"] != "pass")
        std::printf("  trial %d: %s\n", jt["trial"].get<int>(),
                    jt.dump().c_str());
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus fields of Kummer ell^n-cyclic extensions of F_q(T)"};
  app.require_subcommand(1);

  std::string instance_path, cert_path, out_path, emit = "json", bezout_opt, oracle_mode = "auto";
  bool verify = false, as_json = false;
  int i0_opt = 0, only_criterion = 0, trials = 100, max_r = 3;
  i64 max_deg = 6;
  u64 seed = 1, q = 0, ell = 0;
  int n = 1;

  auto* compute = app.add_subcommand("compute", "compute a genus-field certificate");
  compute->add_option("instance", instance_path, "instance JSON file")->required();
  compute->add_option("--emit", emit, "json|text")->check(CLI::IsMember({"json", "text"}));
  compute->add_flag("--verify", verify, "run the check suite and embed the reports");
  compute->add_option("--out", out_path, "write output to a file instead of stdout");
  compute->add_option("--seed", seed, "seed for randomized polynomial factorization");
  compute->add_option("--bezout", bezout_opt, "override the Bezout pair, 'a,b'");
  compute->add_option("--i0", i0_opt, "override the index i0 (must attain m)");

  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate file");
  verify_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();
  verify_cmd->add_option("--out", out_path, "write the report to a file");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance corpora");
  selftest->add_flag("--json", as_json, "machine-readable report array");
  selftest->add_option("--criterion", only_criterion, "run a single criterion (1-7)");

  auto* random = app.add_subcommand("random", "seeded random instance batch");
  random->add_option("--q", q, "field size (prime)")->required();
  random->add_option("--ell", ell, "prime ell")->required();
  random->add_option("--n", n, "exponent n");
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--trials", trials, "number of instances");
  random->add_option("--max-r", max_r, "max number of primes");
  random->add_option("--max-deg", max_deg, "max prime degree");
  random->add_option("--oracle", oracle_mode, "auto|on|off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  random->add_option("--emit", emit, "json|text")->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed())
      return cmd_compute(instance_path, emit, verify, out_path, seed, bezout_opt, i0_opt);
    if (verify_cmd->parsed()) return cmd_verify(cert_path, out_path);
    if (selftest->parsed()) return cmd_selftest(as_json, only_criterion);
    if (random->parsed())
      return cmd_random(q, ell, n, seed, trials, max_r, max_deg, oracle_mode,
                        emit == "json" ? "json" : "text");
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
