// Exit-code and byte-level checks against the installed CLI surface. These
// run the actual binary (path injected by the build) through std::system.

#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef LMGSIM_CLI_PATH

namespace {

int run_cli(const std::string& args) {
  const std::string command =
      std::string(LMGSIM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "lmgsim_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("cli exit codes") {
  const auto dir = temp_dir();
  const std::string out = (dir / "series.csv").string();

  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("simulate --lambda 0.75 --lambda-prime 0.5 --spins 100 "
                "--kx 1 --ky -1 --kz 1 --t-max 1 --steps 5 --out " +
                out) == 0);
  // invalid configuration -> 2
  CHECK(run_cli("simulate --lambda -1 --out " + out) == 2);
  CHECK(run_cli("simulate --lambda 1 --spins 7 --out " + out) == 2);
  CHECK(run_cli("simulate --lambda 1 --kx 1 --ky 1 --kz 1 --out " + out) == 2);
  CHECK(run_cli("figure nosuch --out-dir " + dir.string()) == 2);
  CHECK(run_cli("bogus-subcommand") == 2);
}

TEST_CASE("cli config file with flag precedence") {
  const auto dir = temp_dir();
  const auto config_path = dir / "run.conf";
  {
    std::ofstream config(config_path);
    config << "lambda=0.75\nlambda-prime=0.5\nspins=100\n"
           << "kx=1\nky=-1\nkz=1\nt-max=2\nsteps=9\n"
           << "out=" << (dir / "from_config.csv").string() << "\n";
  }
  CHECK(run_cli("simulate --config " + config_path.string()) == 0);
  CHECK(std::filesystem::exists(dir / "from_config.csv"));

  // command line overrides the file
  CHECK(run_cli("simulate --config " + config_path.string() + " --steps 3 " +
                "--out " + (dir / "override.csv").string()) == 0);
  const std::string csv = slurp(dir / "override.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("cli figure preset runs twice to identical bytes") {
  const auto dir_a = temp_dir() / "fig_a";
  const auto dir_b = temp_dir() / "fig_b";
  CHECK(run_cli("figure fig2a --steps 41 --out-dir " + dir_a.string()) == 0);
  CHECK(run_cli("figure fig2a --steps 41 --out-dir " + dir_b.string()) == 0);
  CHECK(slurp(dir_a / "fig2a.csv") == slurp(dir_b / "fig2a.csv"));
  CHECK(std::filesystem::exists(dir_a / "fig2a.gp"));
}

TEST_CASE("cli oracle modes") {
  CHECK(run_cli("oracle evolve --lambda 1.25 --lambda-prime 1.5 --spins 12 "
                "--kx 1 --ky -1 --kz 1 --t 0.8") == 0);
  CHECK(run_cli("oracle discord --kx 1 --ky -0.2 --kz 0.2 --refine 10") == 0);
  CHECK(run_cli("oracle evolve --lambda 1.25 --spins 80 --t 0.1") == 2);
}

#endif  // LMGSIM_CLI_PATH
