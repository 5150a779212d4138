#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

#ifndef DECAY_CLI_PATH
#error "DECAY_CLI_PATH must point at the decay binary"
#endif

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + std::string(DECAY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# timestamp:", 0) == 0) continue;
    out << line << '\n';
  }
  return out.str();
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "decay_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  const RunResult r = run_cli("predict --help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("--data") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("predict --no-such-flag x --out /tmp/x.csv").exit_code == 2);
  CHECK(run_cli("predict").exit_code == 2);  // --out is required
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("missing input file exits 1 and names the path") {
  const RunResult r = run_cli("predict --data /nope/missing.csv --out /tmp/x.csv");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("/nope/missing.csv") != std::string::npos);
}

TEST_CASE("predict on the embedded data is reproducible modulo timestamp") {
  const fs::path dir = temp_dir();
  const fs::path out1 = dir / "p1.csv";
  const fs::path out2 = dir / "p2.csv";
  CHECK(run_cli("predict --out " + out1.string()).exit_code == 0);
  CHECK(run_cli("predict --out " + out2.string()).exit_code == 0);
  CHECK(strip_timestamp(slurp(out1)) == strip_timestamp(slurp(out2)));
  // per-class plot files exist with two columns
  const std::string alpha = slurp(out1.string() + ".alpha.csv");
  CHECK(alpha.find("E_TKE_MeV,lg_T_model_yr") != std::string::npos);
}

TEST_CASE("predict on an external dataset") {
  const fs::path dir = temp_dir();
  const fs::path data = dir / "mini.csv";
  {
    std::ofstream out(data);
    out << "element,A,Z,A_cl,Z_cl,E_TKE_MeV,E_TKE_err_MeV,Q_MeV,Q_err_MeV,"
           "T_half_exp_yr,T_half_err_lo_yr,T_half_err_hi_yr,role,decay_class\n"
           "U,238,92,4,2,4.198,0.003,4.270,0.001,4.4680E+09,3.00E+05,3.00E+05,fit,alpha\n";
  }
  const fs::path out = dir / "mini_pred.csv";
  const RunResult r = run_cli("predict --data " + data.string() + " --out " + out.string());
  CHECK(r.exit_code == 0);
  const std::string text = slurp(out);
  CHECK(text.find("U,238") != std::string::npos);
  // model value ~9.6496 appears in the lg_T_model column
  CHECK(text.find("9.649") != std::string::npos);
}

TEST_CASE("underdetermined fit exits 1 with a clear message") {
  const fs::path dir = temp_dir();
  const fs::path data = dir / "tiny.csv";
  {
    std::ofstream out(data);
    out << "element,A,Z,A_cl,Z_cl,E_TKE_MeV,E_TKE_err_MeV,Q_MeV,Q_err_MeV,"
           "T_half_exp_yr,T_half_err_lo_yr,T_half_err_hi_yr,role,decay_class\n"
           "U,238,92,4,2,4.198,0.003,4.270,0.001,4.4680E+09,3.00E+05,3.00E+05,fit,alpha\n";
  }
  const RunResult r =
      run_cli("fit --data " + data.string() + " --out " + (dir / "f.txt").string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("20") != std::string::npos);
}

TEST_CASE("DECAY_DATA_DIR overrides the embedded dataset") {
  const fs::path dir = temp_dir() / "override";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "dataset.csv");
    out << "element,A,Z,A_cl,Z_cl,E_TKE_MeV,E_TKE_err_MeV,Q_MeV,Q_err_MeV,"
           "T_half_exp_yr,T_half_err_lo_yr,T_half_err_hi_yr,role,decay_class\n"
           "U,238,92,4,2,4.198,0.003,4.270,0.001,4.4680E+09,3.00E+05,3.00E+05,fit,alpha\n";
  }
  const fs::path out = temp_dir() / "override_pred.csv";
  const RunResult r = run_cli("predict --out " + out.string(),
                              "DECAY_DATA_DIR=" + dir.string() + " ");
  CHECK(r.exit_code == 0);
  const std::string text = slurp(out);
  CHECK(text.find("DECAY_DATA_DIR") != std::string::npos);  // manifest records it
  CHECK(text.find("Pt,168") == std::string::npos);          // embedded rows not used
}

TEST_CASE("simulate output embeds the summary and manifest seed") {
  const fs::path out = temp_dir() / "sim.csv";
  const RunResult r = run_cli(
      "simulate --barrier 1.0 --eps 0.25 --gamma 0.5 --traj 200 --seed 11 --out " +
      out.string());
  CHECK(r.exit_code == 0);
  const std::string text = slurp(out);
  CHECK(text.find("# seed: 11") != std::string::npos);
  CHECK(text.find("# analytic_rate:") != std::string::npos);
  CHECK(text.find("traj_id,escape_time,censored") != std::string::npos);
}

TEST_CASE("invert and validate run end to end on the embedded data") {
  const fs::path dir = temp_dir();
  CHECK(run_cli("invert --out " + (dir / "inv.csv").string()).exit_code == 0);
  CHECK(run_cli("validate --out " + (dir / "val.csv").string()).exit_code == 0);
  CHECK(run_cli("compare --out " + (dir / "cmp.csv").string()).exit_code == 0);
  const std::string inv = slurp(dir / "inv.csv");
  CHECK(inv.find("40.4") != std::string::npos);
  CHECK(inv.find("51.8") != std::string::npos);
}
