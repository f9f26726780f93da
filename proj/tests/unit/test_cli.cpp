#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "lmode/cli/commands.hpp"
#include "lmode/cli/config.hpp"
#include "lmode/cli/csv.hpp"

using namespace lmode::cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run_cli(const std::string& args) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / "lmode_cli_test.out";
  const auto err = dir / "lmode_cli_test.err";
  const std::string cmd = std::string(LMODE_CLI_PATH) + " " + args + " >" + out.string() +
                          " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(2895.0) == "2895");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("initial state syntax") {
  const auto s = parse_initial("1,3");
  CHECK(s.total() == 4);
  CHECK(s.amp(3) == lmode::cplx{1.0});
  CHECK(parse_fock_pair(" 2 , 0 ") == lmode::FockPair{2, 0});

  const auto amps = parse_initial("amps:1:3,0;0,4");
  CHECK(std::abs(amps.amp(0)) == doctest::Approx(0.6));
  CHECK(amps.amp(1).imag() == doctest::Approx(0.8));
  CHECK(amps.norm_correction() < 1e-15);
  CHECK_FALSE(parse_fock_pair("amps:1:1,0;0,1").has_value());

  CHECK_THROWS_AS(parse_initial("1"), UsageError);
  CHECK_THROWS_AS(parse_initial("-1,2"), UsageError);
  CHECK_THROWS_AS(parse_initial("a,b"), UsageError);
  CHECK_THROWS_AS(parse_initial("amps:2:1,0;0,1"), UsageError);
  CHECK_THROWS_AS(parse_initial("amps:1:0,0;0,0"), UsageError);
}

TEST_CASE("time values and units") {
  CHECK(parse_time_value("pi") == doctest::Approx(std::numbers::pi));
  CHECK(parse_time_value("2pi") == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(parse_time_value("0.5pi") == doctest::Approx(0.5 * std::numbers::pi));
  CHECK(parse_time_value("3.25") == 3.25);
  CHECK_THROWS_AS(parse_time_value("ten"), UsageError);
  CHECK(parse_time_unit("ps") == lmode::TimeUnit::picoseconds);
  CHECK(parse_time_unit("phase") == lmode::TimeUnit::phase);
  CHECK_THROWS_AS(parse_time_unit("fs"), UsageError);
}

TEST_CASE("config files") {
  RunConfig cfg;
  std::istringstream in(
      "# local modes\n"
      "omega_cm1 = 3000\n"
      "gamma_cm1=100   # anharmonicity\n"
      "epsilon_cm1=20\n"
      "initial=0,4\n"
      "t_max=4pi\n"
      "steps=11\n"
      "time_unit=phase\n"
      "lambda=2\n"
      "witnesses=su11,D\n");
  apply_config(cfg, in);
  CHECK(cfg.params == lmode::ModelParams{3000.0, 100.0, 20.0});
  CHECK(cfg.initial == "0,4");
  CHECK(cfg.t_max == doctest::Approx(4.0 * std::numbers::pi));
  CHECK(cfg.steps == 11);
  CHECK(cfg.lambda == 2.0);
  CHECK(cfg.witnesses == std::vector<std::string>{"su11", "D"});
  CHECK_NOTHROW(validate(cfg));
  CHECK(time_grid(cfg).size() == 11);

  std::istringstream bad("colour=blue\n");
  CHECK_THROWS_AS(apply_config(cfg, bad), UsageError);
  std::istringstream no_eq("omega_cm1 3000\n");
  CHECK_THROWS_AS(apply_config(cfg, no_eq), UsageError);
}

TEST_CASE("validation") {
  RunConfig cfg;
  cfg.steps = 0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg = {};
  cfg.params.epsilon = 0.0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg.unit = lmode::TimeUnit::picoseconds;
  CHECK_NOTHROW(validate(cfg));
  cfg = {};
  cfg.witnesses = {"bogus"};
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg = {};
  cfg.lambda = 0.0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg = {};
  cfg.params.omega = -1.0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
}

TEST_CASE("in-process commands") {
  RunConfig cfg;
  cfg.initial = "1,0";
  std::ostringstream out, summary;
  CHECK(run_command("spectrum", cfg, out, summary) == kExitOk);
  const auto rows = parse_csv(out.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"index", "eigenvalue_cm1", "amp_1_0", "amp_0_1"});
  CHECK(rows[1][1] == "2895");
  CHECK(rows[2][1] == "2955");
  CHECK_THROWS_AS(run_command("plot", cfg, out, summary), UsageError);

  cfg.total = 65;
  CHECK_THROWS_AS(run_command("spectrum", cfg, out, summary), UsageError);
  cfg.total = 0;
  std::ostringstream vac;
  run_command("spectrum", cfg, vac, summary);
  CHECK(parse_csv(vac.str())[1][1] == "0");

  RunConfig zero;
  zero.initial = "0,0";
  CHECK_THROWS_AS(run_command("entropy", zero, out, summary), UsageError);
}

TEST_CASE("executable: CSV shape and determinism") {
  const std::string args = "fidelity --initial 0,2 --tmax 4pi --steps 101";
  const Run first = run_cli(args);
  const Run second = run_cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const auto rows = parse_csv(first.out);
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == std::vector<std::string>{"t", "phase", "fidelity"});
  CHECK(rows[1] == std::vector<std::string>{"0", "0", "1"});
  CHECK(first.err.find("min fidelity") != std::string::npos);
}

TEST_CASE("executable: every command honours the step count") {
  for (const auto& cmd : {"fidelity", "entropy", "witnesses", "bell", "quadratures"}) {
    const Run r = run_cli(std::string(cmd) + " --initial 1,2 --steps 37 --tmax 3pi");
    CHECK(r.code == 0);
    CHECK(parse_csv(r.out).size() == 38);
  }
}

TEST_CASE("executable: figure datasets") {
  SUBCASE("witness columns for |2,2>") {
    const Run r = run_cli("witnesses --initial 2,2 --tmax 4pi --steps 801");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows[0].size() == 12);
    const auto su11 = column(rows[0], "su11");
    const auto simon = column(rows[0], "simon");
    const auto hz = column(rows[0], "hz");
    const auto d = column(rows[0], "D");
    bool dip = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      dip = dip || std::stod(rows[i][su11]) < 0.0;
      CHECK(std::stod(rows[i][simon]) >= 0.0);
      CHECK(std::stod(rows[i][hz]) >= 0.0);
      CHECK(std::stod(rows[i][d]) <= 1e-12);
    }
    CHECK(dip);
    for (std::size_t k = 3; k < rows[1].size(); ++k) CHECK(std::stod(rows[1][k]) >= 0.0);
    CHECK(r.err.find("su11: min -") != std::string::npos);
  }
  SUBCASE("selected witness columns") {
    const Run r = run_cli("witnesses --initial 0,1 --steps 3 --witnesses hz,D");
    CHECK(parse_csv(r.out)[0] == std::vector<std::string>{"t", "phase", "S_bits", "hz", "D"});
  }
  SUBCASE("Bell overlaps on a quarter-period grid") {
    const Run r = run_cli("bell --tmax pi --steps 5");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(std::stod(rows[1][2]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(std::stod(rows[2][2]) - 1.0) <= 1e-9);
    CHECK(std::abs(std::stod(rows[4][3]) - 1.0) <= 1e-9);
    CHECK(r.err.find("population of |1,0> = 1") != std::string::npos);
  }
  SUBCASE("quadratures of the vacuum") {
    const Run r = run_cli("quadratures --initial 0,0 --steps 4");
    const auto rows = parse_csv(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      for (std::size_t k = 2; k < 6; ++k) CHECK(rows[i][k] == "0.5");
    }
    CHECK(r.err.find("single-mode squeezing: no") != std::string::npos);
  }
  SUBCASE("entropy in picoseconds") {
    const Run r = run_cli("entropy --initial 0,1 --time-unit ps --tmax 0.2780 --steps 3");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows[1][2] == "0");
    CHECK(std::stod(rows[2][3]) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("executable: perturbation reports") {
  const Run ok = run_cli("perturb --initial 4,0");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid: true") != std::string::npos);
  CHECK(ok.out.find("closed-form magnitude 0.16") != std::string::npos);
  CHECK(ok.out.find("exact eigenspace overlap: 0.9997") != std::string::npos);

  for (const auto& init : {"2,1", "1,0"}) {
    const Run bad = run_cli(std::string("perturb --initial ") + init);
    CHECK(bad.code == 0);
    CHECK(bad.out.find("valid: false") != std::string::npos);
    CHECK(bad.out.find("perturbation theory not applicable") != std::string::npos);
  }
}

TEST_CASE("executable: config file, overrides and --out") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto cfg = dir / "lmode_cli_test.cfg";
  const auto csv = dir / "lmode_cli_test.csv";
  {
    std::ofstream f(cfg);
    f << "initial=1,0\nepsilon_cm1=10\nsteps=7\n";
  }
  const Run r = run_cli("spectrum --config " + cfg.string() + " --epsilon 20 --out " + csv.string());
  CHECK(r.code == 0);
  const auto rows = parse_csv(slurp(csv));
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][1] == "2905");
  CHECK(r.out.find("# spectrum") != std::string::npos);
}

TEST_CASE("executable: exit codes") {
  CHECK(run_cli("fidelity --steps 0").code == kExitUsage);
  CHECK(run_cli("fidelity --initial banana").code == kExitUsage);
  CHECK(run_cli("fidelity --nope").code == kExitUsage);
  CHECK(run_cli("").code == kExitUsage);
  CHECK(run_cli("spectrum --total 65").code == kExitUsage);
  CHECK(run_cli("fidelity --config /nonexistent/file").code == kExitUsage);
  CHECK(run_cli("entropy --initial 0,0").code == kExitUsage);
  CHECK(run_cli("fidelity --epsilon 0").code == kExitUsage);
  CHECK(run_cli("fidelity --epsilon 0 --time-unit ps --tmax 1").code == kExitOk);
  CHECK(run_cli("spectrum --help").code == kExitOk);
}

}  // TEST_SUITE
