#include <doctest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(FGAUT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("eval") {
  CHECK(cli("eval \"a1 a1^-1\"").out == "1\n");
  CHECK(cli("eval --aut \"(a1 -> a1 a2) * (a1 -> a1 a2)\"").out == "a1 -> a1 a2 a2; a2 -> a2\n");
  CHECK(cli("eval --mk \"(a1 ; a1 -> a1 a2) * (a2 ; 1)\"").out == "(a1 a2 ; a1 -> a1 a2)\n");
  CHECK(cli("eval \"a1 (\"").code == 2);
  CHECK(cli("eval --aut \"a1 -> a1 a1\"").code != 0);
}

TEST_CASE("verify") {
  auto r = cli("verify --suite mk.assoc --seed 7");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["samples"] == 1000);
  CHECK(j["seed"] == 7);
  CHECK(cli("verify --suite families.DB --n 4").code == 0);
  CHECK(cli("verify --suite nielsen.trace --seed 0").code == 0);
  CHECK(cli("verify --suite no.such").code == 2);
  r = cli("verify --suite mk. --summary");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"summary\":true") != std::string::npos);
  CHECK(count(cli("verify --list").out, "\n") >= 26);
}

TEST_CASE("verify output is byte-identical across runs and job counts") {
  const auto a = cli("verify --suite splittings. --seed 5");
  const auto b = cli("verify --suite splittings. --seed 5");
  const auto c = cli("verify --suite splittings. --seed 5 --jobs 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out != cli("verify --suite splittings. --seed 6").out);
}

TEST_CASE("ball exports") {
  auto r = cli("ball rose@N=3,k=1 --L 1 --format dot");
  CHECK(r.code == 0);
  CHECK(count(r.out, " -- ") == 2);
  CHECK(count(r.out, "label=") >= 3);
  r = cli("ball rose@N=3,k=1 --L 0 --format dot");
  CHECK(count(r.out, " -- ") == 0);
  CHECK(cli("ball rose@N=3 --L 1").code == 2);

  CHECK(cli("ball rose@N=4,k=2 --L 3 --format json -o cli_ball.json").code == 0);
  CHECK(cli("ball --from-json cli_ball.json --format json -o cli_ball2.json").code == 0);
  CHECK(slurp("cli_ball.json") == slurp("cli_ball2.json"));
  CHECK(cli("ball rose@N=4,k=2 --L 3 --format dot").out == cli("ball --from-json cli_ball.json --format dot").out);
  const auto j = nlohmann::json::parse(slurp("cli_ball.json"));
  CHECK(j["vertices"].size() == j["edges"].size() + 1);
  std::remove("cli_ball.json");
  std::remove("cli_ball2.json");
}

TEST_CASE("fix and centralizer") {
  auto r = cli("fix \"a1 -> a1 a2\" --L 3");
  CHECK(r.code == 0);
  CHECK(count(r.out, "\n") == 9);
  CHECK(r.out.find("a1 a2 a1^-1") != std::string::npos);
  CHECK(count(cli("fix \"1\" --L 1").out, "\n") == 5);
  r = cli("centralizer AutTauCentral@N=3 --depth 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("a1 -> a1 a2") != std::string::npos);
  CHECK(cli("centralizer Bogus@N=3").code == 2);
  r = cli("centralizer \"DB@N=4~conj=a1 -> a1 a2\"");
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());
  CHECK(cli("centralizer \"a1 -> a1 a2\"").code == 0);
}
