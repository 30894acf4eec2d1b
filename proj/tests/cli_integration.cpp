#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "kummer/json_io.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_binary;
std::string g_data_dir;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult res;
  std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("genusfield_test_" + name);
}

}  // namespace

TEST_CASE("compute on the 8-prime instance") {
  std::string inst = g_data_dir + "/golden_8prime.json";

  RunResult json = run("compute " + inst);
  REQUIRE(json.exit_code == 0);
  auto j = kummer::ordered_json::parse(json.out);
  CHECK(j["degD"] == 387459855);
  CHECK(j["m"] == 5);
  CHECK(j["i0"] == 3);
  CHECK(j["bezout"]["a"] == -1312);
  CHECK(j["bezout"]["b"] == 1);
  CHECK(j["y"]["5"] == 59048);
  CHECK(j["checks"].empty());

  RunResult text = run("compute " + inst + " --emit text");
  REQUIRE(text.exit_code == 0);
  CHECK(text.out.find("i0 = 3") != std::string::npos);
  CHECK(text.out.find("P_3^70848") != std::string::npos);

  RunResult verified = run("compute " + inst + " --verify");
  CHECK(verified.exit_code == 0);

  // byte-identical reruns
  RunResult again = run("compute " + inst);
  CHECK(json.out == again.out);
}

TEST_CASE("compute with an unfactored D and a fixed seed is reproducible") {
  fs::path inst = temp_file("concrete.json");
  {
    std::ofstream f(inst);
    f << R"({"q": 13, "ell": 3, "n": 1, "gamma": 2,
             "D": {"coeffs": "0,2,0,3,0,0,1"}})";
  }
  RunResult a = run("compute " + inst.string() + " --seed 7 --verify");
  RunResult b = run("compute " + inst.string() + " --seed 7 --verify");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify a computed certificate, then a tampered one") {
  std::string inst = g_data_dir + "/golden_8prime.json";
  fs::path cert = temp_file("cert.json");
  RunResult computed = run("compute " + inst + " --out " + cert.string());
  REQUIRE(computed.exit_code == 0);

  RunResult ok = run("verify " + cert.string());
  CHECK(ok.exit_code == 0);
  auto reports = kummer::ordered_json::parse(ok.out);
  bool saw_recompute = false;
  for (const auto& r : reports)
    if (r["name"] == "certificate.recompute") saw_recompute = r["status"] == "pass";
  CHECK(saw_recompute);

  // verify on the emitted file reaches the same verdicts as compute --verify
  RunResult embedded = run("compute " + inst + " --verify");
  REQUIRE(embedded.exit_code == 0);
  auto with_checks = kummer::ordered_json::parse(embedded.out);
  auto strip = [](const kummer::ordered_json& arr) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : arr) out.emplace_back(r["name"], r["status"]);
    return out;
  };
  CHECK(strip(with_checks["checks"]) == strip(reports));

  // flip one exponent in the stored certificate
  std::ifstream in(cert);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  auto pos = text.find("70848");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 5, "70849");
  fs::path tampered = temp_file("tampered.json");
  std::ofstream(tampered) << text;
  RunResult bad = run("verify " + tampered.string());
  CHECK(bad.exit_code == 1);
}

TEST_CASE("i0 and bezout overrides keep the canonical subgroups") {
  std::string inst = g_data_dir + "/golden_8prime.json";
  RunResult forced = run("compute " + inst + " --i0 1 --verify");
  CHECK(forced.exit_code == 0);  // the other index attaining m; checks still pass
  auto j = kummer::ordered_json::parse(forced.out);
  CHECK(j["i0"] == 1);
  RunResult bad = run("compute " + inst + " --i0 7");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("bad inputs exit with code 2") {
  fs::path junk = temp_file("junk.json");
  std::ofstream(junk) << R"({"q": 13, "ell": 3, "n": 2, "gamma": 1, "D": {"coeffs": "1,1"}})";
  RunResult r = run("compute " + junk.string());  // 9 does not divide 12
  CHECK(r.exit_code == 2);
  RunResult missing = run("compute /nonexistent.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("random batches are deterministic and reject bad parameters") {
  RunResult a = run("random --q 19 --ell 3 --n 2 --trials 20 --seed 5");
  RunResult b = run("random --q 19 --ell 3 --n 2 --trials 20 --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto j = kummer::ordered_json::parse(a.out);
  CHECK(j["failures"] == 0);
  CHECK(j["peng_runs"] == 0);

  RunResult n1 = run("random --q 13 --ell 3 --n 1 --trials 10 --seed 5");
  CHECK(n1.exit_code == 0);
  CHECK(kummer::ordered_json::parse(n1.out)["peng_runs"] == 10);

  RunResult bad = run("random --q 13 --ell 3 --n 2 --trials 5");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("selftest --json emits a machine-readable report") {
  RunResult r = run("selftest --criterion 6 --json");
  CHECK(r.exit_code == 0);
  auto j = kummer::ordered_json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["id"] == 6);
  CHECK(j[0]["status"] == "pass");
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: cli_integration <genusfield-binary> <data-dir>\n");
    return 2;
  }
  g_binary = argv[1];
  g_data_dir = argv[2];
  doctest::Context ctx;
  return ctx.run();
}
