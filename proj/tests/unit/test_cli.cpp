#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  namespace fs = std::filesystem;
  std::string cmd = std::string(CLI_PATH) + " " + args;
  fs::path input;
  if (!stdin_text.empty()) {
    input = fs::temp_directory_path() / "clique_spectra_cli_input.txt";
    std::ofstream(input) << stdin_text;
    cmd += " < " + input.string();
  }
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!input.empty()) fs::remove(input);
  return r;
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

const std::string kDiamond = "0 1\n0 2\n0 3\n1 2\n1 3\n";

}  // namespace

TEST_CASE("spectral subcommand") {
  Run r = run("spectral - --t 3", kDiamond);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rho_3 = 1.5874010520"));
  CHECK(contains(r.out, "converged: yes"));

  r = run("spectral - --t 3", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "note: no 3-cliques"));

  r = run("spectral - --t 2 --json", kDiamond);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"schema\": \"clique-spectra/spectral-result\""));

  r = run("spectral - --t 2 --max-iter 1 --tol 1e-15", "0 1\n1 2\n2 3\n3 0\n0 2\n3 4\n");
  CHECK(r.code == 3);
}

TEST_CASE("bounds subcommand") {
  Run r = run("bounds - --t 3", kDiamond);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "kind: multipartite-omega-eq-t"));
  CHECK(contains(r.out, "clique_local_zykov"));

  r = run("bounds - --t 2 --csv", kDiamond);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph_id,", 0) == 0);

  r = run("bounds - --t 3 --json", "0 1\n1 2\n2 0\n");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"bounds\""));
}

TEST_CASE("cliques subcommand") {
  const Run r = run("cliques - --t 3", kDiamond);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "|C_3|=2, omega=3"));
  CHECK(contains(r.out, "c_3: 2 2 1 1"));
}

TEST_CASE("generate subcommand") {
  Run r = run("generate turan --n 6 --r 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n 6\n", 0) == 0);
  r = run("generate multipartite 1,1,2 --format dimacs");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p edge 4 5"));
  const Run a = run("generate gnp --n 9 --p 0.4 --seed 5");
  const Run b = run("generate gnp --n 9 --p 0.4 --seed 5");
  CHECK(a.out == b.out);
}

TEST_CASE("verify subcommand") {
  Run r = run("verify --n-max 4 --t 2,3 --spectral --jobs 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "75 graphs, 0 violations, census consistent"));
  r = run("verify --n-max 9");
  CHECK(r.code == 2);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("spectral - --t 1", kDiamond).code == 2);
  CHECK(run("spectral /nonexistent/file").code == 2);
  CHECK(run("spectral -", "0 x\n").code == 2);
  CHECK(run("--help").code == 0);
}
