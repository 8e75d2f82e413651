// Exercises the built binary through its public surface: flags, output
// bytes, exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& tag) {
  std::string out_path = "cli_" + tag + ".out";
  std::string err_path = "cli_" + tag + ".err";
  std::string cmd = std::string(RANKCRANK_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("moments csv contains exact values") {
  auto r = run_cli("moments --kind crank --k 1 --n-max 10 --format csv", "m1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,value\n") == 0);
  CHECK(r.out.find("\n4,40\n") != std::string::npos);
  CHECK(r.out.find("\n1,2\n") != std::string::npos);  // generating-function row at n = 1
}

TEST_CASE("constants json holds rational strings") {
  auto r = run_cli("constants --k-max 2 --format json", "c1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"xi\": \"1/6\"") != std::string::npos);
  CHECK(r.out.find("\"xi\": \"7/120\"") != std::string::npos);
  CHECK(r.out.find("\"lambda_tilde\": \"-2\"") != std::string::npos);
  CHECK(r.out.find("\"alpha\": \"84/5\"") != std::string::npos);
  // never a float in exact fields
  CHECK(r.out.find(".0") == std::string::npos);
}

TEST_CASE("constants csv schema") {
  auto r = run_cli("constants --k-max 1 --format csv", "c2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("k,xi,xi_prime,xi_tilde,lambda_tilde,alpha,beta_coeff\n") == 0);
  CHECK(r.out.find("\n1,1/6,-1,0,-2,2,2\n") != std::string::npos);
}

TEST_CASE("verify subcommands exit zero on pass") {
  CHECK(run_cli("verify pde --k-max 2 --n-max 60", "v1").exit_code == 0);
  CHECK(run_cli("verify inequality --k-max 1 --n-max 60", "v2").exit_code == 0);
  CHECK(run_cli("verify identities --n-max 60", "v3").exit_code == 0);
  CHECK(run_cli("verify constants", "v4").exit_code == 0);
}

TEST_CASE("verify convergence exits one when the trend fails") {
  // reversed n_list makes the decreasing-error criterion fail by design
  auto r = run_cli("verify convergence --kind partition --k 0 --n-list 100,50", "v5");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"status\": \"fail\"") != std::string::npos);
}

TEST_CASE("usage errors exit two with usage text on stderr") {
  auto r = run_cli("moments --bogus-flag 3", "u1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);

  auto r2 = run_cli("predict --kind diff --k 1 --n 50 --terms 2", "u2");
  CHECK(r2.exit_code == 2);
  CHECK(r2.err.find("Usage") != std::string::npos);

  auto r3 = run_cli("nonsense", "u3");
  CHECK(r3.exit_code == 2);

  auto r4 = run_cli("predict --kind crank --k 1 --n 50 --precision-bits 32", "u4");
  CHECK(r4.exit_code == 2);
}

TEST_CASE("table csv schema") {
  auto r = run_cli("table --kind diff --k 1 --n-list 50,100", "t1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,exact,pred1,pred2,rel_err,scaled_remainder\n") == 0);
  CHECK(r.out.find("\n50,") != std::string::npos);
  CHECK(r.out.find("\n100,") != std::string::npos);
}

TEST_CASE("predict emits scientific-notation floats") {
  auto r = run_cli("predict --kind partition --n 100 --precision-bits 128", "p1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,value\n") == 0);
  CHECK(r.out.find("e+") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  auto a = run_cli("moments --kind rank --k 2 --n-max 40 --format json", "d1");
  auto b = run_cli("moments --kind rank --k 2 --n-max 40 --format json", "d2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto c = run_cli("table --kind crank --k 1 --n-list 20,40", "d3");
  auto d = run_cli("table --kind crank --k 1 --n-list 20,40", "d4");
  CHECK(c.out == d.out);
}

TEST_CASE("out flag writes a file") {
  std::string path = "cli_outfile.csv";
  auto r = run_cli("moments --kind crank --k 0 --n-max 5 --format csv --out " + path, "o1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::string content = slurp(path);
  CHECK(content.find("n,value\n") == 0);
  CHECK(content.find("\n5,7\n") != std::string::npos);  // p(5) = 7
  std::remove(path.c_str());
}
