#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "stsig/certificate_io.hpp"
#include "stsig/constructions.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + std::string(STSIG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("stsig_cli_test_" + name);
}

}  // namespace

TEST_CASE("classify") {
  const RunResult ok = run_cli("classify 5,0,0");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "SCHOTTKY 2,0,0\n");
  CHECK(run_cli("classify 3,1,2").out == "MIXED_CUSP 0,1,1\n");
  CHECK(run_cli("classify 1,0,0").exit_code == 2);
  CHECK(run_cli("classify banana").exit_code == 2);
  CHECK(run_cli("classify").exit_code == 2);
}

TEST_CASE("equivalent") {
  CHECK(run_cli("equivalent 4,0,0 17,0,0").out == "true\n");
  const RunResult diff = run_cli("equivalent 2,0,0 0,2,0");
  CHECK(diff.exit_code == 0);
  CHECK(diff.out == "false\n");
  CHECK(run_cli("equivalent 0,1,0 2,0,0").exit_code == 2);
}

TEST_CASE("construct") {
  const RunResult r = run_cli("construct --family A --parent 1,1,1 --n 3 --r 1 --s 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3,2,2\n");
  // omitted twist lists default to zeros
  CHECK(run_cli("construct --family A --parent 2,0,0 --n 4").out == "5,0,0\n");
  // 2r > n is malformed input
  CHECK(run_cli("construct --family A --parent 1,1,0 --n 3 --r 2").exit_code == 2);
  CHECK(run_cli("construct --family B --parent 2,0,0 --n 2").exit_code == 2);
}

TEST_CASE("certify, verify and tampering") {
  const auto cert_path = temp_file("cert.json");
  const RunResult certify =
      run_cli("certify 4,1,1 --out " + cert_path.string());
  CHECK(certify.exit_code == 0);
  CHECK(certify.out.find("input: 4,1,1") != std::string::npos);
  CHECK(certify.out.find("canonical: 0,1,1") != std::string::npos);
  CHECK(certify.out.find("steps: 5") != std::string::npos);

  const RunResult verify = run_cli("verify " + cert_path.string());
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("OK") == 0);

  // determinism: a second run produces identical bytes
  CHECK(run_cli("certify 4,1,1").out == run_cli("certify 4,1,1").out);

  // tamper with the canonical class token: still well-formed JSON, bad math
  std::string text = stsig::read_text_file(cert_path.string());
  const auto pos = text.find("MIXED_CUSP");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("MIXED_CUSP").size(), "SCHOTTKY");
  const auto tampered_path = temp_file("tampered.json");
  stsig::write_text_file(tampered_path.string(), text);
  const RunResult bad = run_cli("verify " + tampered_path.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") == 0);

  // unreadable and unparsable input is malformed, not a proof failure
  CHECK(run_cli("verify /nonexistent/path.json").exit_code == 2);
  const auto junk_path = temp_file("junk.json");
  stsig::write_text_file(junk_path.string(), "{]");
  CHECK(run_cli("verify " + junk_path.string()).exit_code == 2);
}

TEST_CASE("certify rejects elementary input") {
  CHECK(run_cli("certify 0,1,0").exit_code == 2);
}

TEST_CASE("certify then verify round-trips across all four classes") {
  const auto path = temp_file("roundtrip.json");
  for (const std::string sig :
       {"2,0,0", "17,0,0", "0,20,0", "6,3,0", "9,0,4", "0,0,7", "5,1,1", "0,8,2"}) {
    CHECK(run_cli("certify " + sig + " --out " + path.string()).exit_code == 0);
    CHECK(run_cli("verify " + path.string()).exit_code == 0);
  }
}

TEST_CASE("oracle") {
  using namespace stsig;
  const auto spec_path = temp_file("theta.json");
  write_text_file(spec_path.string(),
                  theta_to_json(theta_of({Family::A, {2, 0, 0}, 3, {}, {}})));
  const RunResult r = run_cli("oracle --spec " + spec_path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4,0,0\n");
  CHECK(run_cli("oracle --spec " + spec_path.string() + " --basepoint 1").out ==
        "4,0,0\n");
  CHECK(run_cli("oracle --spec " + spec_path.string() + " --basepoint 9").exit_code == 2);

  // non-transitive spec is rejected
  const auto flat_path = temp_file("flat.json");
  write_text_file(flat_path.string(),
                  "{\"n\":2,\"parent\":[2,0,0],\"lox\":[[1,2],[1,2]]}");
  CHECK(run_cli("oracle --spec " + flat_path.string()).exit_code == 2);
}

TEST_CASE("schreier") {
  const RunResult plain = run_cli("schreier --family A --parent 1,1,0 --n 2 --r 1");
  CHECK(plain.exit_code == 0);
  CHECK(plain.out.find("generators: 3") != std::string::npos);
  CHECK(plain.out.find("census: loxodromic=3 parabolic=0 identity=0") !=
        std::string::npos);

  const RunResult diff_b =
      run_cli("schreier --family B --parent 0,2,0 --n 2 --r 1 --diff-paper");
  CHECK(diff_b.exit_code == 0);
  CHECK(diff_b.out.find("verdict: matches-up-to-B1^n-correction") != std::string::npos);

  const RunResult diff_a =
      run_cli("schreier --family A --parent 1,1,0 --n 4 --r 1 --diff-paper");
  CHECK(diff_a.exit_code == 0);
  CHECK(diff_a.out.find("verdict: exact-match") != std::string::npos);

  const RunResult bfs = run_cli("schreier --family A --parent 1,1,0 --n 2 --r 1 --bfs");
  CHECK(bfs.exit_code == 0);

  // a BFS transversal walks down as well as up, so its generating multiset
  // differs from the printed one by more than inversion: diff must fail
  const RunResult bfs_diff =
      run_cli("schreier --family A --parent 1,1,0 --n 3 --r 0 --bfs --diff-paper");
  CHECK(bfs_diff.exit_code == 1);
  CHECK(bfs_diff.out.find("verdict: mismatch") != std::string::npos);
}

TEST_CASE("sweep bound validation") {
  CHECK(run_cli("sweep --max-parent-sum 1").exit_code == 2);
  CHECK(run_cli("sweep --max-n 0").exit_code == 2);
}

TEST_CASE("sweep with small bounds") {
  const std::string args =
      "sweep --max-parent-sum 2 --max-n 2 --random-thetas 25 --max-component 6 "
      "--schreier-max-parent-sum 2 --schreier-max-n 2";
  const RunResult r = run_cli(args);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sweep: PASS") != std::string::npos);
  CHECK(r.out.find("oracle-vs-formula:") != std::string::npos);
  CHECK(r.out.find("reducer-totality:") != std::string::npos);
  // byte-identical across runs and across worker counts
  CHECK(run_cli(args).out == r.out);
  CHECK(run_cli(args, "SCHOTTKY_SIG_THREADS=1 ").out == r.out);
  CHECK(run_cli(args, "SCHOTTKY_SIG_THREADS=7 ").out == r.out);
}
