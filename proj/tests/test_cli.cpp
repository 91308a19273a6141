// Exercises the installed CLI surface: exit codes, JSON output, generator
// round-trips, experiment determinism at the file level.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
std::string g_tmpdir;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  std::string out_file = g_tmpdir + "/out.txt";
  std::string cmd = g_cli + " " + args + " > " + out_file + " 2>" + g_tmpdir + "/err.txt";
  int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("analyze digon") {
  write_file(g_tmpdir + "/digon.txt", "2 2\n0 1\n1 0\n");
  auto r = run("analyze " + g_tmpdir + "/digon.txt --alpha 0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"rho\": 1") != std::string::npos);
  CHECK(r.stdout_text.find("\"energy\": 2") != std::string::npos);
  // Eigenvalue list is [[re, im], ...] with the near-1 entry first.
  CHECK((r.stdout_text.find("\"eigenvalues\": [[0.9999") != std::string::npos ||
         r.stdout_text.find("\"eigenvalues\": [[1") != std::string::npos));
}

TEST_CASE("analyze with exact rational alpha") {
  write_file(g_tmpdir + "/k3.txt", "3 6\n0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n");
  auto r = run("analyze " + g_tmpdir + "/k3.txt --alpha 1/2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"rho\": 2") != std::string::npos);
  CHECK(r.stdout_text.find("\"energy\": 3") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  write_file(g_tmpdir + "/bad.txt", "2 1\n0 0\n");
  auto r = run("analyze " + g_tmpdir + "/bad.txt --alpha 0");
  CHECK(r.exit_code == 2);
  r = run("analyze " + g_tmpdir + "/missing_file.txt --alpha 0");
  CHECK(r.exit_code == 2);
  r = run("analyze " + g_tmpdir + "/digon.txt --alpha 1.7");
  CHECK(r.exit_code == 2);
  r = run("bogus-subcommand");
  CHECK(r.exit_code == 2);
}

TEST_CASE("bounds reports equality flags") {
  write_file(g_tmpdir + "/k4.txt",
             "4 12\n0 1\n0 2\n0 3\n1 0\n1 2\n1 3\n2 0\n2 1\n2 3\n3 0\n3 1\n3 2\n");
  auto r = run("bounds " + g_tmpdir + "/k4.txt --alpha 0.5 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"sr_upper_km\": 3") != std::string::npos);
  CHECK(r.stdout_text.find("\"SR_UPPER_KM\": {\"numeric_equality\": true, "
                           "\"structural_match\": true}") != std::string::npos);
}

TEST_CASE("generate and re-analyze") {
  auto r = run("generate tournament --n 5");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.rfind("5 10\n", 0) == 0);

  r = run("generate k-regular --n 12 --k 3 --seed 4 --out " + g_tmpdir + "/kr.txt");
  CHECK(r.exit_code == 0);
  auto r2 = run("analyze " + g_tmpdir + "/kr.txt --alpha 0.3 --format json");
  CHECK(r2.exit_code == 0);

  // Determinism of generation.
  auto a = run("generate core-complete --n 20 --r 3 --beta 0.4 --extra-arcs 10 --seed 5");
  auto b = run("generate core-complete --n 20 --r 3 --beta 0.4 --extra-arcs 10 --seed 5");
  CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("verify small scope") {
  auto r = run("verify --max-n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("0 failures") != std::string::npos);
  r = run("verify --max-n 6");
  CHECK(r.exit_code == 2);  // above the cap
}

TEST_CASE("experiment emits stable files") {
  std::string base = "experiment --table 2 --alpha 0.3 --samples 10 --seed 11 "
                     "--k-grid 4 --n-grid 16 --out " + g_tmpdir + "/exp";
  auto r = run(base);
  CHECK(r.exit_code == 0);
  std::ifstream csv1(g_tmpdir + "/exp.csv");
  std::ostringstream buf1;
  buf1 << csv1.rdbuf();
  CHECK(buf1.str().rfind("bound_id,", 0) == 0);

  std::string cmd = "DIGRAPH_SPECTRA_THREADS=3 " + g_cli +
                    " experiment --table 2 --alpha 0.3 --samples 10 --seed 11 "
                    "--k-grid 4 --n-grid 16 --out " + g_tmpdir + "/exp2 >/dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  std::ifstream csv2(g_tmpdir + "/exp2.csv");
  std::ostringstream buf2;
  buf2 << csv2.rdbuf();
  CHECK(buf1.str() == buf2.str());
}

int main(int argc, char** argv) {
  doctest::Context context;
  int arg_end = argc;
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_cli = argv[argc - 1];
    arg_end = argc - 1;
  } else if (const char* env = std::getenv("DIGRAPH_SPECTRA_CLI")) {
    g_cli = env;
  }
  char tmpl[] = "/tmp/dgs_cli_XXXXXX";
  g_tmpdir = mkdtemp(tmpl);
  context.applyCommandLine(arg_end, argv);
  return context.run();
}
