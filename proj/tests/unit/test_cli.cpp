#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " FFALG_CLI_PATH " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("basis") {
  Run r = run("basis --two-n 2 --ell 1");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["index"]["I"] == json({1}));
  CHECK(j[1]["index"]["J"] == json({1}));
  CHECK(run("basis --two-n 2 --ell 0").code == 0);
}

TEST_CASE("residue check") {
  Run r = run("residue-check --two-n 4 --ell 2");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_zero"] == true);
  CHECK(j["elements"].size() == 7);
}

TEST_CASE("quotient character") {
  Run r = run("quotient-char --two-n 2 --ell 1 --max-deg 6 --compare-branching");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["dims"]["dims_by_deg1"] == json({0, 1, 1, 2, 2, 3, 3}));
  CHECK(j["comparison"]["match"] == true);
}

TEST_CASE("tower commands") {
  Run r = run("tower-check --m 0 --r 0 --n-max 2");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_ok"] == true);
  CHECK(j["reports"].size() == 2);

  Run b = run("tower-build --m 1 --r 1 --I 1 --n 2 --max-t-degree 1 --z-order 1");
  CHECK(b.code == 0);
  json lvl = json::parse(b.out);
  CHECK(lvl["two_n"] == 4);
  CHECK(run("tower-build --m 1 --r 1 --I 1 --n 2 --anti --hat").code == 0);
  CHECK(run("tower-check --m 1 --r 1 --J 1 --n-max 3 --anti --max-t-degree 1").code == 0);
}

TEST_CASE("odd decomposition from stdin") {
  const std::string poly = R"({"vars":2,"terms":[{"exp":[1,1],"num":"1","den":"1"}]})";
  Run r = run("decompose-odd --file -", "echo '" + poly + "' |");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["summands"].size() == 2);
  CHECK(run("decompose-odd --poly '" + poly + "'").out == r.out);
}

TEST_CASE("zeta") {
  Run r = run("zeta --beta 0.3,0.1 --check-eqs");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["residuals"]["product"].get<double>() < 1e-6);
  CHECK(j["ok"] == true);
  CHECK(json::parse(run("zeta --beta 0.3,0.1", "FFALG_BARNES_N=300").out)["N"] == 300);
  CHECK(run("zeta --beta 0.3,0.1", "FFALG_BARNES_N=abc").code == 2);
  CHECK(run("zeta --beta 0.3,0.1 --N 8 --tol 1e-12").code == 1);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"tower-build --m 1 --r 1 --I 1 --n 2 --max-t-degree 1", "basis --two-n 4 --ell 2",
                           "quotient-char --two-n 4 --ell 1 --max-deg 4"}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("basis --two-n").code == 2);
  CHECK(run("basis --two-n 3 --ell 1").code == 2);
  CHECK(run("tower-check --m 1 --r 0 --J 1").code == 2);
  CHECK(run("zeta --beta 0.3").code == 2);
  CHECK(run("decompose-odd --poly '{\"vars\":2,\"terms\":[{\"exp\":[1,0],\"num\":\"1\"}]}'").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("tower-check --help").code == 0);
}
