#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CHIRO_BIN) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  const int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("cli count") {
  CHECK(run("count 'convex(7)' --method brute").out == "42\n");
  CHECK(run("count 'convex(7)' --method poly").out == "42\n");
  CHECK(run("count 'koch(3)' --drop-root").out == "424\n");
  CHECK(run("--oracle-cap 13 count 'convex(13)'").out == "58786\n");
}

TEST_CASE("cli poly and tables") {
  CHECK(run("poly 'chik(2)' --which Q").out == "{\"terms\":[[2,\"2\"],[3,\"2\"],[4,\"1\"],[5,\"1\"]]}\n");
  const Run t = run("dc-table --kmax 5");
  CHECK(t.status == 0);
  const auto last = t.out.rfind('\n', t.out.size() - 2);
  CHECK(t.out.substr(last + 1).rfind("5,250,", 0) == 0);
  CHECK(run("kernel-report --x 0.05").out.find("F_series") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run("count 'meet(triangle)'").status == 1);
  CHECK(run("count 'koch(4)' --method brute").status == 1);
  CHECK(run("count").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("count triangle --method sideways").status == 2);
  CHECK(run("axioms /nonexistent.chi").status == 1);
}
