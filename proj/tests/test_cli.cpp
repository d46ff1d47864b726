#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ewens/permutation.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

std::string cli_binary() {
  const char* env = std::getenv("EWENS_CLI_BIN");
  REQUIRE_MESSAGE(env != nullptr, "EWENS_CLI_BIN must point at the built binary");
  return env;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string command = env_prefix + cli_binary() + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream row(line);
  std::string cell;
  while (std::getline(row, cell, ',')) cells.push_back(cell);
  return cells;
}

bool contains_line(const std::string& text, const std::string& line) {
  for (const auto& l : lines_of(text)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("sample emits valid single-cycle permutations at theta 0") {
  const auto r = run_cli("sample --n 5 --theta 0 --count 3 --seed 1");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 3);
  for (const auto& line : lines) {
    const auto j = nlohmann::json::parse(line);
    const auto p = ewens::make_permutation(j.get<std::vector<int>>());
    CHECK(ewens::cycle_count(p) == 1);
  }
}

TEST_CASE("sample is deterministic and respects notation/format") {
  const auto a = run_cli("sample --n 5 --theta 1 --count 4 --seed 42");
  const auto b = run_cli("sample --n 5 --theta 1 --count 4 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const auto csv = run_cli("sample --n 5 --theta 1 --count 1 --seed 42 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find('[') == std::string::npos);

  const auto cycles = run_cli("sample --n 4 --theta 0 --count 1 --seed 3 --notation cycles");
  CHECK(cycles.exit_code == 0);
  const auto j = nlohmann::json::parse(lines_of(cycles.output).at(0));
  CHECK(j.is_array());
  CHECK(j.at(0).is_array());

  CHECK(run_cli("sample --n 4 --theta 0 --notation cycles --format csv").exit_code == 2);
}

TEST_CASE("sample argument errors exit 2") {
  CHECK(run_cli("sample --n 2 --theta 1").exit_code == 2);
  CHECK(run_cli("sample --n 5 --theta -1").exit_code == 2);
  CHECK(run_cli("sample --n 5").exit_code == 2);      // missing --theta
  CHECK(run_cli("sample --bogus 1").exit_code == 2);  // unknown flag
  CHECK(run_cli("").exit_code == 2);                  // missing subcommand
}

TEST_CASE("exact evaluates closed forms and rationals") {
  const auto e = run_cli("exact --n 4 --theta 2 --format csv");
  CHECK(e.exit_code == 0);
  CHECK(e.output == "E|Inv| = 2.5\n");

  const auto er = run_cli("exact --n 4 --theta 2 --rational --format csv");
  CHECK(er.exit_code == 0);
  CHECK(er.output == "E|Inv| = 2.5 = 5/2 (exact)\n");

  const auto p = run_cli("exact --n 5 --theta 0 --pair 1,4 --format csv");
  CHECK(p.exit_code == 0);
  CHECK(p.output == "P((1,4) inverted) = 0.66666666666666663\n");

  const auto e3 = run_cli("exact --n 3 --theta 1 --format csv");
  CHECK(e3.exit_code == 0);
  CHECK(e3.output == "E|Inv| = 1.5\n");

  // P_{1/2}((1,4) inverted) on n = 5 is (1 + 6 + 2)/(9/2 * 7/2) = 4/7
  const auto pq = run_cli("exact --n 5 --theta 1/2 --pair 1,4 --format json");
  CHECK(pq.exit_code == 0);
  CHECK(nlohmann::json::parse(pq.output).at("P_exact").get<std::string>() == "4/7");
}

TEST_CASE("exact routes p/q theta through the oracle and caps n") {
  const auto j = nlohmann::json::parse(run_cli("exact --n 4 --theta 1/2").output);
  CHECK(j.contains("E_exact"));  // '/' in theta triggers the exact route
  CHECK(run_cli("exact --n 12 --theta 1/2").exit_code == 3);
  CHECK(run_cli("exact --n 12 --theta 0.5").exit_code == 0);  // closed form still fine
  CHECK(run_cli("exact --n 5 --theta 1 --pair 4,2").exit_code == 2);
}

TEST_CASE("certify passes and emits the expected rows") {
  const auto r = run_cli("certify --n-max 6");
  REQUIRE(r.exit_code == 0);
  CHECK(contains_line(r.output, "b,3,2,5"));
  CHECK(contains_line(r.output, "convex,4,false"));
  CHECK(contains_line(r.output, "convex,5,true"));
  CHECK(contains_line(r.output, "oeis,4,22,22,ok"));
  CHECK(r.output.find("FAIL") == std::string::npos);

  CHECK(run_cli("certify --n-max 12").exit_code == 3);
  CHECK(run_cli("certify --n-max 6 --theta-grid 1,-2").exit_code == 2);
}

TEST_CASE("certify exports coefficient tables") {
  const std::string prefix = "/tmp/ewens_cli_tables";
  const auto r = run_cli("certify --n-max 3 --export-tables " + prefix);
  REQUIRE(r.exit_code == 0);
  std::ifstream totals(prefix + "_total_3.csv");
  std::stringstream totals_text;
  totals_text << totals.rdbuf();
  CHECK(totals_text.str() == "n,k,count\n3,1,4\n3,2,5\n3,3,0\n");
  std::ifstream pairs(prefix + "_pair_3.csv");
  std::string header;
  std::getline(pairs, header);
  CHECK(header == "n,i,j,k,count");
}

TEST_CASE("mc reports z-scores and honors exit semantics") {
  const auto r = run_cli("mc --n 20 --theta 1 --samples 4000 --seed 7");
  REQUIRE(r.exit_code == 0);
  const auto reports = nlohmann::json::parse(r.output);
  REQUIRE(reports.is_array());
  CHECK(reports.at(0).at("statistic") == "inversions");
  CHECK(reports.at(0).at("target").get<double>() == doctest::Approx(95.0));
  CHECK(std::fabs(reports.at(0).at("z").get<double>()) < 4.0);

  CHECK(run_cli("mc --n 5 --theta 1 --samples 1").exit_code == 2);
  CHECK(run_cli("mc --n 5 --theta 1 --samples 100 --check bogus").exit_code == 2);

  // a deliberately impossible threshold must flip the exit code to 1
  const auto bad = run_cli("mc --n 20 --theta 1 --samples 4000 --seed 7 --z-max 0.0001");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("mc cycles check uses the slack floor") {
  const auto r = run_cli("mc --n 100 --theta 1.5 --samples 5000 --seed 9 --check cycles --m 3");
  REQUIRE(r.exit_code == 0);
  const auto reports = nlohmann::json::parse(r.output);
  CHECK(reports.at(0).at("statistic") == "cycle_count_m3");
  CHECK(reports.at(0).at("target").get<double>() == doctest::Approx(0.5));
  CHECK(reports.at(0).at("slack").get<double>() == 0.01);
}

TEST_CASE("mc all runs every check") {
  const auto r = run_cli("mc --n 12 --theta 1 --samples 3000 --seed 11 --check all --pair 2,7");
  REQUIRE(r.exit_code == 0);
  const auto reports = nlohmann::json::parse(r.output);
  CHECK(reports.size() == 4);
  bool has_finite_n = false;
  for (const auto& rec : reports) has_finite_n = has_finite_n || rec.contains("finite_n_mean");
  CHECK(has_finite_n);
}

TEST_CASE("mc output is independent of the worker cap") {
  const std::string args = "mc --n 15 --theta 0.5 --samples 6000 --seed 5 --format csv";
  const auto one = run_cli(args, "EWENS_THREADS=1 ");
  const auto two = run_cli(args, "EWENS_THREADS=2 ");
  const auto four = run_cli(args, "EWENS_THREADS=4 ");
  CHECK(one.exit_code == 0);
  CHECK(one.output == two.output);
  CHECK(one.output == four.output);
}

TEST_CASE("sweep emits monotone columns") {
  const auto r = run_cli("sweep --n 10 --from 0 --to 10 --steps 11");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "theta,value");
  double previous = 1e300;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const double value = std::stod(split_csv(lines[k]).at(1));
    CHECK(value < previous);
    previous = value;
  }

  // adjacent pair: value column increases near theta = 0
  const auto up = run_cli("sweep --n 5 --pair 1,2 --from 0 --to 0.2 --steps 5");
  const auto up_lines = lines_of(up.output);
  CHECK(std::stod(split_csv(up_lines.back()).at(1)) > std::stod(split_csv(up_lines[1]).at(1)));

  // derivative2 starts negative for n = 4 (not convex)
  const auto d = run_cli("sweep --n 4 --from 0 --to 2 --steps 3 --derivatives");
  const auto d_lines = lines_of(d.output);
  CHECK(d_lines[0] == "theta,value,derivative1,derivative2");
  CHECK(std::stod(split_csv(d_lines[1]).at(3)) < 0.0);

  CHECK(run_cli("sweep --n 10 --from 5 --to 1 --steps 3").exit_code == 2);
  CHECK(run_cli("sweep --n 10 --from 0 --to 1 --steps 1").exit_code == 2);
}

TEST_CASE("asymptotics expansion and scaling") {
  const auto zero = run_cli("asymptotics expansion --theta 1 --n 50,100,200,400");
  REQUIRE(zero.exit_code == 0);
  for (const auto& line : lines_of(zero.output)) {
    if (line.rfind("n,", 0) == 0) continue;
    CHECK(std::fabs(std::stod(split_csv(line).at(5))) < 1e-9);  // theta = 1: residual vanishes
  }

  const auto band = run_cli("asymptotics expansion --theta 0 --n 50,100,200,400 --stat pair");
  double lo = 1e300, hi = 0.0;
  for (const auto& line : lines_of(band.output)) {
    if (line.rfind("n,", 0) == 0) continue;
    const double scaled = std::fabs(std::stod(split_csv(line).at(6)));
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(hi / lo < 10.0);

  const auto s = run_cli("asymptotics scaling --c 1 --alpha 1 --n 2000");
  REQUIRE(s.exit_code == 0);
  CHECK(std::fabs(std::stod(split_csv(lines_of(s.output).at(1)).at(6)) - 1.0) <= 0.02);

  CHECK(run_cli("asymptotics scaling --c 0 --alpha 1 --n 100").exit_code == 2);
}

TEST_CASE("config files mirror flags and flags win") {
  {
    std::ofstream config("/tmp/ewens_cli_config.ini");
    config << "seed=42\nformat=csv\n[sweep]\nn=10\nfrom=0\nto=10\nsteps=11\n";
  }
  const auto from_config = run_cli("--config /tmp/ewens_cli_config.ini sweep");
  const auto from_flags =
      run_cli("sweep --n 10 --from 0 --to 10 --steps 11 --seed 42 --format csv");
  CHECK(from_config.exit_code == 0);
  CHECK(from_config.output == from_flags.output);

  // flags override the file
  const auto overridden = run_cli("--config /tmp/ewens_cli_config.ini sweep --steps 5");
  CHECK(lines_of(overridden.output).size() == 6);

  // round trip: dumped config reparses to the same effective config
  const auto dump = run_cli("--config /tmp/ewens_cli_config.ini sweep --dump-config");
  REQUIRE(dump.exit_code == 0);
  {
    std::ofstream config("/tmp/ewens_cli_config2.ini");
    config << dump.output;
  }
  const auto redump = run_cli("--config /tmp/ewens_cli_config2.ini sweep --dump-config");
  CHECK(redump.output == dump.output);
}

TEST_CASE("outputs are byte-stable across runs") {
  const std::string args = "certify --n-max 4";
  CHECK(run_cli(args).output == run_cli(args).output);
  const std::string mc_args = "mc --n 10 --theta 2 --samples 2000 --seed 3";
  CHECK(run_cli(mc_args).output == run_cli(mc_args).output);
}

TEST_CASE("--output writes the same bytes to a file") {
  const std::string path = "/tmp/ewens_cli_out.csv";
  const auto direct = run_cli("sweep --n 6 --from 0 --to 3 --steps 4");
  const auto filed = run_cli("sweep --n 6 --from 0 --to 3 --steps 4 --output " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream file(path);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(text.str() == direct.output);
}
