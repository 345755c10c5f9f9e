#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "golden_data.hpp"

// End-to-end tests of the installed command-line surface.  Everything runs
// through std::system against the real binary (path injected at compile
// time), so argument parsing, exit codes and stream routing are all covered.

namespace {

namespace fs = std::filesystem;

const fs::path kDir = fs::temp_directory_path() / "ccc_cli_tests";

std::string quoted(const fs::path& p) { return '"' + p.string() + '"'; }

// Runs `ccc <args>` with stdout/stderr captured; returns the exit code.
int run(const std::string& args, const fs::path& out, const fs::path& err,
        const fs::path& in = {}) {
  std::string cmd = std::string("\"") + CCC_TOOL_PATH + "\" " + args + " > " +
                    quoted(out) + " 2> " + quoted(err);
  if (!in.empty()) cmd += " < " + quoted(in);
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Workspace {
  fs::path out, err;
  Workspace() {
    fs::create_directories(kDir);
    out = kDir / "stdout.txt";
    err = kDir / "stderr.txt";
  }
};

// The pinned (3,3,9) set's generate invocation, reused across cases.
const std::string kGen339 = "generate --length 9 --q 3 --coeffs 1=1,2 --const 1=1";

}  // namespace

TEST_CASE("factor prints canonical factorizations") {
  Workspace ws;
  CHECK(run("factor 36", ws.out, ws.err) == 0);
  CHECK(slurp(ws.out) == "36 = 2^2 * 3^2\n");
  CHECK(run("factor 97", ws.out, ws.err) == 0);
  CHECK(slurp(ws.out) == "97 = 97\n");
  CHECK(run("factor 1", ws.out, ws.err) == 2);
  CHECK(slurp(ws.err).rfind("error:", 0) == 0);
}

TEST_CASE("generate reproduces the pinned set and reports a summary") {
  Workspace ws;
  const fs::path set = kDir / "set339.json";
  REQUIRE(run(kGen339 + " --out " + quoted(set), ws.out, ws.err) == 0);
  CHECK(slurp(ws.out) == "CCC(K=3,M=3,L=9,lambda=3)\n");

  const nlohmann::json j = nlohmann::json::parse(slurp(set));
  CHECK(j.at("lambda") == 3);
  CHECK(j.at("K") == 3);
  CHECK(j.at("M") == 3);
  CHECK(j.at("L") == 9);
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t i = 0; i < 9; ++i)
        CHECK(j.at("codes").at(t).at(r).at(i) ==
              golden::kCcc339[t][r][i]);

  // Writing the payload to stdout moves the summary to stderr.
  REQUIRE(run(kGen339, ws.out, ws.err) == 0);
  CHECK(slurp(ws.out) == slurp(set));
  CHECK(slurp(ws.err) == "CCC(K=3,M=3,L=9,lambda=3)\n");
}

TEST_CASE("generate wants exactly one length source") {
  Workspace ws;
  CHECK(run("generate --length 9 --factors 3^2", ws.out, ws.err) == 2);
  CHECK(run("generate", ws.out, ws.err) == 2);
  CHECK(run("generate --length 9 --q 5", ws.out, ws.err) == 2);  // 3 nmid 5
  CHECK(slurp(ws.err).rfind("error:", 0) == 0);
}

TEST_CASE("seeded generation is reproducible byte for byte") {
  Workspace ws;
  const fs::path a = kDir / "seed_a.json";
  const fs::path b = kDir / "seed_b.json";
  REQUIRE(run("generate --length 12 --seed 5 --out " + quoted(a), ws.out,
              ws.err) == 0);
  REQUIRE(run("generate --length 12 --seed 5 --out " + quoted(b), ws.out,
              ws.err) == 0);
  CHECK(slurp(a) == slurp(b));
  REQUIRE(run("generate --length 12 --seed 6 --out " + quoted(b), ws.out,
              ws.err) == 0);
  CHECK(slurp(a) != slurp(b));
}

TEST_CASE("verify distinguishes pass, violation and bad data") {
  Workspace ws;
  const fs::path set = kDir / "verify_set.json";
  REQUIRE(run(kGen339 + " --out " + quoted(set), ws.out, ws.err) == 0);

  const fs::path report = kDir / "report.json";
  CHECK(run("verify " + quoted(set) + " --out " + quoted(report), ws.out,
            ws.err) == 0);
  CHECK(slurp(ws.out) == "CCC(K=3,M=3,L=9,lambda=3)\n");
  nlohmann::json rep = nlohmann::json::parse(slurp(report));
  CHECK(rep.at("class") == "CCC");
  CHECK(rep.at("peak") == 27);
  CHECK(rep.at("violations").empty());

  // Through stdin as well.
  CHECK(run("verify -", ws.out, ws.err, set) == 0);

  // One corrupted digit must flip the verdict and the exit code.
  nlohmann::json broken = nlohmann::json::parse(slurp(set));
  broken["codes"][0][0][0] = (broken["codes"][0][0][0].get<int>() + 1) % 3;
  const fs::path bad = kDir / "broken_set.json";
  std::ofstream(bad) << broken.dump(2) << '\n';
  CHECK(run("verify " + quoted(bad) + " --out " + quoted(report), ws.out,
            ws.err) == 1);
  rep = nlohmann::json::parse(slurp(report));
  CHECK(rep.at("class") == "Fail");
  CHECK(!rep.at("violations").empty());

  // Data problems are usage errors, not verification verdicts.
  const fs::path garbage = kDir / "garbage.json";
  std::ofstream(garbage) << "{nope";
  CHECK(run("verify " + quoted(garbage), ws.out, ws.err) == 2);
  const fs::path empty_set = kDir / "empty_set.json";
  std::ofstream(empty_set)
      << R"({"lambda":2,"K":0,"M":0,"L":0,"labels":[],"codes":[]})";
  CHECK(run("verify " + quoted(empty_set), ws.out, ws.err) == 2);
  CHECK(run("verify " + quoted(kDir / "no_such_file.json"), ws.out, ws.err) ==
        2);
  CHECK(run("verify " + quoted(set) + " --float --exact", ws.out, ws.err) == 2);
  CHECK(run("verify " + quoted(set) + " --max-work 10", ws.out, ws.err) == 2);
}

TEST_CASE("profile emits the csv trace") {
  Workspace ws;
  const fs::path set = kDir / "profile_set.json";
  REQUIRE(run(kGen339 + " --out " + quoted(set), ws.out, ws.err) == 0);
  const fs::path csv = kDir / "profile.csv";
  CHECK(run("profile " + quoted(set) + " 0 0 --out " + quoted(csv), ws.out,
            ws.err) == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind("u,re,im,exact_zero\n-8,", 0) == 0);
  CHECK(text.find("\n0,27,0,false\n") != std::string::npos);
  CHECK(run("profile " + quoted(set) + " 9 0", ws.out, ws.err) == 2);
}

TEST_CASE("kron matches the direct composite generation") {
  Workspace ws;
  const fs::path a = kDir / "kron_a.json";
  const fs::path b = kDir / "kron_b.json";
  const fs::path ab = kDir / "kron_ab.json";
  const fs::path direct = kDir / "kron_direct.json";
  REQUIRE(run("generate --factors 2^2 --q 6 --coeffs 1=1,0 --const 1=1 --out " +
                  quoted(a),
              ws.out, ws.err) == 0);
  REQUIRE(run("generate --factors 3^2 --q 6 --coeffs 1=2,0 --const 1=2 --out " +
                  quoted(b),
              ws.out, ws.err) == 0);
  REQUIRE(run("generate --factors 2^2,3^2 --q 6 --coeffs 1=1,0 --coeffs 2=2,0"
              " --const 1=1 --const 2=2 --out " +
                  quoted(direct),
              ws.out, ws.err) == 0);
  CHECK(run("kron " + quoted(a) + ' ' + quoted(b) + " --out " + quoted(ab),
            ws.out, ws.err) == 0);
  CHECK(slurp(ws.out) == "CodeSet(K=6,M=6,L=36,lambda=6)\n");
  CHECK(slurp(ab) == slurp(direct));

  CHECK(run("kron " + quoted(a) + ' ' + quoted(b) + " --verify --out " +
                quoted(ab),
            ws.out, ws.err) == 0);
  CHECK(slurp(ws.out) == "CCC(K=6,M=6,L=36,lambda=6)\n");
}

TEST_CASE("psi maps a function file to its sequence") {
  Workspace ws;
  const fs::path fn = kDir / "function.json";
  std::ofstream(fn) << R"({"factors": [[2, 2], [3, 2]], "q": 6, "terms": [
    {"vars": [0, 1], "coeff": 2},
    {"vars": [0, 2], "coeff": 1},
    {"vars": [3], "coeff": 1}]})";
  const fs::path seq = kDir / "sequence.json";
  CHECK(run("psi " + quoted(fn) + " --out " + quoted(seq), ws.out, ws.err) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(seq));
  CHECK(j.at("lambda") == 6);
  CHECK(j.at("L") == 36);
  REQUIRE(j.at("values").size() == 36);
  for (std::size_t i = 0; i < 36; ++i)
    CHECK(j.at("values").at(i) == golden::kSeq36[i]);

  std::ofstream(fn) << R"({"factors": [[2, 1]], "q": 2, "terms": 7})";
  CHECK(run("psi " + quoted(fn), ws.out, ws.err) == 2);
}

TEST_CASE("top-level usage errors") {
  Workspace ws;
  CHECK(run("", ws.out, ws.err) == 2);
  CHECK(run("frobnicate", ws.out, ws.err) == 2);
  CHECK(run("generate --length 9 --bogus", ws.out, ws.err) == 2);
  CHECK(run("--help", ws.out, ws.err) == 0);
  CHECK(slurp(ws.out).find("generate") != std::string::npos);
}
