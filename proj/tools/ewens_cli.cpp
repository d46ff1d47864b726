// Command-line front end: sampling, exact evaluation, certification sweeps,
// Monte Carlo checks and plot-ready CSV output.
//
// Exit codes: 0 success, 1 check failure, 2 argument error, 3 capability
// error. EWENS_THREADS caps internal worker counts.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ewens/errors.hpp"
#include "ewens/formulas.hpp"
#include "ewens/io.hpp"
#include "ewens/montecarlo.hpp"
#include "ewens/oracle.hpp"
#include "ewens/permutation.hpp"
#include "ewens/rational.hpp"
#include "ewens/sampler.hpp"

namespace {

using ewens::BigInteger;
using ewens::BigRational;
using ewens::EwensParams;
using ewens::format_double;
using ewens::Permutation;
using ewens::RandomSeed;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string output;
  std::string format = "json";
};

// Writes to --output when given, stdout otherwise.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("--output: cannot open '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::pair<int, int> parse_pair(const std::string& text, int n) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--pair expects i,j (e.g. --pair 1,3)");
  }
  int i = 0, j = 0;
  try {
    i = std::stoi(text.substr(0, comma));
    j = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("--pair expects integers i,j");
  }
  if (i < 1 || j > n || i >= j) {
    throw std::invalid_argument("--pair: need 1 <= i < j <= n, got " + text);
  }
  return {i, j};
}

std::optional<BigRational> try_rational(const std::string& text) {
  try {
    return BigRational::from_string(text);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

double parse_theta_double(const std::string& text) {
  if (const auto r = try_rational(text)) return r->to_double();
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("--theta: cannot parse '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// sample

int cmd_sample(const GlobalOptions& global, int n, const std::string& theta_text,
               std::uint64_t count, const std::string& notation) {
  const double theta = parse_theta_double(theta_text);
  const EwensParams params{n, theta};
  ewens::validate(params);
  if (notation != "oneline" && notation != "cycles") {
    throw std::invalid_argument("--notation must be oneline or cycles");
  }
  if (notation == "cycles" && global.format == "csv") {
    throw std::invalid_argument("--notation cycles requires --format json");
  }
  OutputSink sink(global.output);
  ewens::SplitMix64 rng({global.seed, global.stream});
  for (std::uint64_t s = 0; s < count; ++s) {
    const Permutation p = ewens::sample_ewens(params, rng);
    if (notation == "cycles") {
      sink.stream() << ewens::to_json(ewens::decompose(p)).dump() << '\n';
    } else if (global.format == "csv") {
      const auto word = p.one_line();
      for (std::size_t k = 0; k < word.size(); ++k) {
        sink.stream() << (k ? "," : "") << word[k];
      }
      sink.stream() << '\n';
    } else {
      sink.stream() << ewens::to_json(p).dump() << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// exact

int cmd_exact(const GlobalOptions& global, int n, const std::string& theta_text,
              const std::string& pair_text, bool rational_flag, bool force) {
  if (n < 3) throw std::invalid_argument("--n must be >= 3");
  const bool rational_route = rational_flag || theta_text.find('/') != std::string::npos;
  const int cap = force ? ewens::oracle::kEnumerationHardCap : ewens::oracle::kEnumerationCap;

  std::optional<BigRational> theta_exact = try_rational(theta_text);
  if (rational_route && !theta_exact) {
    throw std::invalid_argument("--theta: exact evaluation needs an integer, p/q or plain decimal");
  }
  if (rational_route && n > cap) {
    throw ewens::capability_error("exact rational certification needs n <= " +
                                  std::to_string(cap) +
                                  "; rerun without --rational for the closed form");
  }
  if (rational_route && n == ewens::oracle::kEnumerationHardCap) {
    std::cerr << "exact: n = 11 streams 39916800 permutations; expect a few seconds\n";
  }
  const double theta = theta_exact ? theta_exact->to_double() : parse_theta_double(theta_text);
  const EwensParams params{n, theta};
  ewens::validate(params);

  OutputSink sink(global.output);
  std::ostream& out = sink.stream();
  nlohmann::json report{{"n", n}, {"theta", theta_text}};

  if (!pair_text.empty()) {
    const auto [i, j] = parse_pair(pair_text, n);
    const double value = ewens::formulas::pair_inversion_probability(params, i, j).value;
    report["pair"] = {i, j};
    report["P"] = value;
    if (rational_route) {
      const BigRational exact = ewens::oracle::exact_pair_probability(n, i, j, *theta_exact, force);
      report["P_exact"] = exact.str();
    }
    if (global.format != "json") {
      out << "P((" << i << ',' << j << ") inverted) = " << format_double(value);
      if (rational_route) out << " = " << report["P_exact"].get<std::string>() << " (exact)";
      out << '\n';
      return 0;
    }
  } else {
    const double value = ewens::formulas::expected_inversions(params).value;
    report["E"] = value;
    if (rational_route) {
      const BigRational exact = ewens::oracle::exact_expected_inversions(n, *theta_exact, force);
      report["E_exact"] = exact.str();
    }
    if (global.format != "json") {
      out << "E|Inv| = " << format_double(value);
      if (rational_route) out << " = " << report["E_exact"].get<std::string>() << " (exact)";
      out << '\n';
      return 0;
    }
  }
  out << report.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyReport {
  std::ostream& out;
  bool all_ok = true;
  std::string first_failure;

  void row(const std::string& line, bool ok = true) {
    out << line << '\n';
    if (!ok && all_ok) {
      all_ok = false;
      first_failure = line;
    }
  }
};

// Enumerated sum_k coeff_k theta^k / theta^(n), with the theta = 0
// single-cycle convention.
BigRational weighted(const std::vector<std::uint64_t>& counts, int n, const BigRational& theta) {
  if (theta.is_zero()) {
    return BigRational(BigInteger(static_cast<unsigned long>(counts[1])),
                       ewens::factorial_big(static_cast<unsigned>(n - 1)));
  }
  BigRational sum(0);
  BigRational power = theta;
  for (int k = 1; k <= n; ++k) {
    sum += BigRational(BigInteger(static_cast<unsigned long>(counts[static_cast<std::size_t>(k)]))) *
           power;
    power *= theta;
  }
  return sum / ewens::oracle::rising_factorial(theta, n);
}

int cmd_certify(const GlobalOptions& global, int n_max, const std::string& grid_text, bool force,
                const std::string& tables_prefix) {
  const int cap = force ? ewens::oracle::kEnumerationHardCap : ewens::oracle::kEnumerationCap;
  if (n_max < 3 || n_max > cap) {
    throw ewens::capability_error("--n-max must be in [3," + std::to_string(cap) +
                                  "] (use --force for 11)");
  }
  if (force && n_max == ewens::oracle::kEnumerationHardCap) {
    std::cerr << "certify: n = 11 streams 39916800 permutations per pass; expect minutes\n";
  }

  std::vector<std::pair<std::string, BigRational>> grid;
  {
    std::stringstream ss(grid_text);
    std::string token;
    while (std::getline(ss, token, ',')) {
      grid.emplace_back(token, BigRational::from_string(token));
      if (grid.back().second.sign() < 0) throw std::invalid_argument("--theta-grid: theta >= 0");
    }
    if (grid.empty()) throw std::invalid_argument("--theta-grid is empty");
  }

  OutputSink sink(global.output);
  CertifyReport report{sink.stream(), true, ""};

  const std::vector<double> sign_grid{0.0, 0.25, 1.0, 4.0, 64.0};

  for (int n = 3; n <= n_max; ++n) {
    const auto pair_tables = ewens::oracle::enumerate_all_pair_coefficients(n, force);
    const auto totals = ewens::oracle::enumerate_total_coefficients(n, force);

    if (!tables_prefix.empty()) {
      std::ofstream totals_csv(tables_prefix + "_total_" + std::to_string(n) + ".csv");
      ewens::oracle::write_csv(totals, totals_csv);
      std::ofstream pairs_csv(tables_prefix + "_pair_" + std::to_string(n) + ".csv");
      pairs_csv << "n,i,j,k,count\n";
      for (const auto& t : pair_tables) {
        for (int k = 1; k <= n; ++k) {
          pairs_csv << n << ',' << t.i << ',' << t.j << ',' << k << ',' << t.at(k) << '\n';
        }
      }
    }

    for (int k = 1; k <= n; ++k) {
      report.row("b," + std::to_string(n) + ',' + std::to_string(k) + ',' +
                 std::to_string(totals.at(k)));
    }

    {
      bool sum_ok = true;
      for (int k = 1; k <= n; ++k) {
        std::uint64_t sum = 0;
        for (const auto& t : pair_tables) sum += t.at(k);
        sum_ok = sum_ok && sum == totals.at(k);
      }
      report.row("b_sum," + std::to_string(n) + ',' + (sum_ok ? "ok" : "FAIL"), sum_ok);
    }
    {
      const BigInteger expected = ewens::binomial_big(static_cast<unsigned>(2 * n), 3) / 4;
      const bool ok = BigInteger(static_cast<unsigned long>(totals.at(n - 1))) == expected;
      report.row("b_top," + std::to_string(n) + ',' + std::to_string(totals.at(n - 1)) + ',' +
                     expected.get_str() + ',' + (ok ? "ok" : "FAIL"),
                 ok);
    }
    {
      const bool ok = totals.at(n) == 0;
      report.row("b_nn," + std::to_string(n) + ',' + std::to_string(totals.at(n)) + ',' +
                     (ok ? "ok" : "FAIL"),
                 ok);
    }

    bool a_nn_ok = true;
    for (const auto& t : pair_tables) {
      const auto expected = static_cast<std::uint64_t>(n - t.j + t.i);
      const bool ok = t.at(n - 1) == expected;
      report.row("a_top," + std::to_string(n) + ',' + std::to_string(t.i) + ',' +
                     std::to_string(t.j) + ',' + std::to_string(t.at(n - 1)) + ',' +
                     std::to_string(expected) + ',' + (ok ? "ok" : "FAIL"),
                 ok);
      a_nn_ok = a_nn_ok && t.at(n) == 0;
    }
    report.row("a_nn," + std::to_string(n) + ',' + (a_nn_ok ? "ok" : "FAIL"), a_nn_ok);

    {
      const BigInteger expected =
          ewens::factorial_big(static_cast<unsigned>(n - 1)) * n * (3 * n - 1) / 12;
      const bool ok = BigInteger(static_cast<unsigned long>(totals.at(1))) == expected;
      report.row("oeis," + std::to_string(n) + ',' + std::to_string(totals.at(1)) + ',' +
                     expected.get_str() + ',' + (ok ? "ok" : "FAIL"),
                 ok);
    }

    {
      const auto histogram = ewens::oracle::stirling_cross_check(n, force);
      const auto stirling = ewens::oracle::stirling_first_kind(n);
      bool ok = true;
      for (int k = 1; k <= n; ++k) {
        ok = ok && BigInteger(static_cast<unsigned long>(histogram.at(k))) ==
                       stirling[static_cast<std::size_t>(k)];
      }
      report.row("stirling," + std::to_string(n) + ',' + (ok ? "ok" : "FAIL"), ok);
    }

    // exact certification of the closed forms on the theta grid
    for (const auto& [token, theta] : grid) {
      BigRational pair_sum(0);
      for (const auto& t : pair_tables) {
        const BigRational enumerated = weighted(t.counts, n, theta);
        const BigRational closed = ewens::oracle::eq_pair_probability(n, t.i, t.j, theta);
        const bool ok =
            enumerated == closed &&
            enumerated == ewens::oracle::eq_pair_probability_partial_fractions(n, t.i, t.j, theta);
        report.row("exact_pair," + std::to_string(n) + ',' + std::to_string(t.i) + ',' +
                       std::to_string(t.j) + ',' + token + ',' + enumerated.str() + ',' +
                       closed.str() + ',' + (ok ? "ok" : "FAIL"),
                   ok);
        pair_sum += enumerated;
      }

      const BigRational expected_enum = weighted(totals.counts, n, theta);
      const BigRational closed_e = ewens::oracle::eq_expected_inversions(n, theta);
      const bool e_ok =
          expected_enum == closed_e &&
          expected_enum == ewens::oracle::eq_expected_inversions_partial_fractions(n, theta);
      report.row("exact_expected," + std::to_string(n) + ',' + token + ',' + expected_enum.str() +
                     ',' + closed_e.str() + ',' + (e_ok ? "ok" : "FAIL"),
                 e_ok);

      const bool sum_ok = pair_sum == expected_enum;
      report.row("pair_sum," + std::to_string(n) + ',' + token + ',' + (sum_ok ? "ok" : "FAIL"),
                 sum_ok);
    }

    // predicates and derivative-sign probes
    report.row("convex," + std::to_string(n) + ',' +
               (ewens::formulas::is_expected_inversions_convex(n) ? "true" : "false"));
    {
      bool ok = true;
      for (double theta : sign_grid) {
        ok = ok && ewens::formulas::expected_inversions_derivative({n, theta}, 1) < 0.0;
        if (ewens::formulas::is_expected_inversions_convex(n)) {
          ok = ok && ewens::formulas::expected_inversions_derivative({n, theta}, 2) > 0.0;
        }
      }
      if (!ewens::formulas::is_expected_inversions_convex(n)) {
        ok = ok && ewens::formulas::expected_inversions_derivative({n, 0.0}, 2) < 0.0;
      }
      report.row("signcheck_expected," + std::to_string(n) + ',' + (ok ? "ok" : "FAIL"), ok);
    }
    {
      bool ok = true;
      bool cm_ok = true;
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (ewens::formulas::is_pair_probability_decreasing(n, i, j)) {
            for (double theta : sign_grid) {
              ok = ok && ewens::formulas::pair_probability_derivative({n, theta}, i, j, 1) <= 1e-15;
            }
          } else {
            ok = ok && ewens::formulas::pair_probability_derivative({n, 0.0}, i, j, 1) > 0.0;
          }
          if (ewens::formulas::is_pair_probability_completely_monotone(n, i, j)) {
            for (int m = 1; m <= 8; ++m) {
              for (double theta : sign_grid) {
                const double alt =
                    ((m % 2 == 0) ? 1.0 : -1.0) *
                    ewens::formulas::pair_probability_derivative({n, theta}, i, j, m);
                cm_ok = cm_ok && alt >= -1e-15;
              }
            }
          } else {
            bool violated = false;
            for (int m = 1; m <= 12 && !violated; ++m) {
              const double alt = ((m % 2 == 0) ? 1.0 : -1.0) *
                                 ewens::formulas::pair_probability_derivative({n, 1.0}, i, j, m);
              violated = alt < 0.0;
            }
            cm_ok = cm_ok && violated;
          }
        }
      }
      report.row("signcheck_pair," + std::to_string(n) + ',' + (ok ? "ok" : "FAIL"), ok);
      report.row("cm," + std::to_string(n) + ',' + (cm_ok ? "ok" : "FAIL"), cm_ok);
    }
  }

  if (!report.all_ok) {
    std::cerr << "certify: FAILED: " << report.first_failure << '\n';
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// mc

int cmd_mc(const GlobalOptions& global, int n, const std::string& theta_text,
           const std::string& pair_text, std::uint64_t samples, const std::string& check,
           int cycle_m, double z_max) {
  const double theta = parse_theta_double(theta_text);
  const EwensParams params{n, theta};
  ewens::validate(params);

  const RandomSeed base{global.seed, global.stream};
  nlohmann::json reports = nlohmann::json::array();
  bool ok = true;

  const bool run_all = check == "all";
  if (check == "inversions" || run_all) {
    const auto e =
        ewens::mc::estimate_expected_inversions(params, samples, {base.seed, base.stream_id});
    auto j = ewens::estimate_report(e, ewens::formulas::expected_inversions(params).value,
                                    params, "inversions");
    reports.push_back(j);
    ok = ok && std::fabs(j.at("z").get<double>()) <= z_max;
  }
  if (check == "pair" || (run_all && !pair_text.empty())) {
    if (pair_text.empty()) throw std::invalid_argument("--check pair needs --pair i,j");
    const auto [i, j] = parse_pair(pair_text, n);
    const auto e = ewens::mc::estimate_pair_probability(params, i, j, samples,
                                                        {base.seed, base.stream_id + 1});
    auto rec = ewens::estimate_report(
        e, ewens::formulas::pair_inversion_probability(params, i, j).value,
        params, "pair_" + std::to_string(i) + "_" + std::to_string(j));
    reports.push_back(rec);
    ok = ok && std::fabs(rec.at("z").get<double>()) <= z_max;
  }
  if (check == "fixed-points" || run_all) {
    const auto e =
        ewens::mc::estimate_fixed_points(params, samples, {base.seed, base.stream_id + 2});
    // theta is the n -> infinity target; the exact finite-n mean
    // n*theta/(theta+n-1) is reported alongside for reference
    auto j = ewens::estimate_report(e, theta, params, "fixed_points");
    j["finite_n_mean"] = static_cast<double>(n) * theta / (theta + n - 1);
    reports.push_back(j);
    ok = ok && std::fabs(j.at("z").get<double>()) <= z_max;
  }
  if (check == "cycles" || run_all) {
    const auto c = ewens::mc::estimate_cycle_length_counts(params, cycle_m, samples,
                                                           {base.seed, base.stream_id + 3});
    const double slack = 0.01;
    reports.push_back(ewens::poisson_report(c, params, slack));
    ok = ok && std::fabs(c.empirical_mean - c.target) <= std::max(z_max * c.std_error, slack);
  }
  if (reports.empty()) {
    throw std::invalid_argument("--check must be inversions, pair, fixed-points, cycles or all");
  }

  OutputSink sink(global.output);
  if (global.format == "csv") {
    sink.stream() << "statistic,target,mean,std_error,z,samples\n";
    for (const auto& j : reports) {
      sink.stream() << j.at("statistic").get<std::string>() << ','
                    << format_double(j.at("target").get<double>()) << ','
                    << format_double(j.at("mean").get<double>()) << ','
                    << format_double(j.at("std_error").get<double>()) << ','
                    << format_double(j.at("z").get<double>()) << ',' << samples << '\n';
    }
  } else {
    sink.stream() << reports.dump(2) << '\n';
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const GlobalOptions& global, int n, double from, double to, int steps,
              const std::string& pair_text, bool derivatives) {
  if (!(from >= 0.0) || !(to > from)) {
    throw std::invalid_argument("--from/--to: need 0 <= from < to");
  }
  if (steps < 2) throw std::invalid_argument("--steps must be >= 2");
  std::optional<std::pair<int, int>> pair;
  if (!pair_text.empty()) pair = parse_pair(pair_text, n);

  OutputSink sink(global.output);
  std::ostream& out = sink.stream();
  out << (derivatives ? "theta,value,derivative1,derivative2\n" : "theta,value\n");
  for (int s = 0; s < steps; ++s) {
    const double theta = from + (to - from) * static_cast<double>(s) / (steps - 1);
    const EwensParams params{n, theta};
    double value, d1, d2;
    if (pair) {
      value = ewens::formulas::pair_inversion_probability(params, pair->first, pair->second).value;
      d1 = ewens::formulas::pair_probability_derivative(params, pair->first, pair->second, 1);
      d2 = ewens::formulas::pair_probability_derivative(params, pair->first, pair->second, 2);
    } else {
      value = ewens::formulas::expected_inversions(params).value;
      d1 = ewens::formulas::expected_inversions_derivative(params, 1);
      d2 = ewens::formulas::expected_inversions_derivative(params, 2);
    }
    out << format_double(theta) << ',' << format_double(value);
    if (derivatives) out << ',' << format_double(d1) << ',' << format_double(d2);
    out << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// asymptotics

int cmd_asymptotics_expansion(const GlobalOptions& global, double theta,
                              const std::vector<int>& n_list, const std::string& stat) {
  if (stat != "pair" && stat != "expected" && stat != "both") {
    throw std::invalid_argument("--stat must be pair, expected or both");
  }
  OutputSink sink(global.output);
  std::ostream& out = sink.stream();
  out << "n,theta,stat,exact,asymptotic,residual,residual_n2\n";
  for (int n : n_list) {
    const EwensParams params{n, theta};
    if (stat != "expected") {
      const int j = 1 + n / 2;  // gap n/2 keeps the explicit term dominant
      const double exact = ewens::formulas::pair_inversion_probability(params, 1, j).value;
      const double asym = ewens::formulas::asymptotic_pair_probability(n, 1, j, theta);
      const double residual = exact - asym;
      out << n << ',' << format_double(theta) << ",pair," << format_double(exact) << ','
          << format_double(asym) << ',' << format_double(residual) << ','
          << format_double(residual * n * n) << '\n';
    }
    if (stat != "pair") {
      const double exact = ewens::formulas::expected_inversions(params).value;
      const double asym = ewens::formulas::asymptotic_expected_inversions(n, theta);
      const double residual = exact - asym;
      out << n << ',' << format_double(theta) << ",expected," << format_double(exact) << ','
          << format_double(asym) << ',' << format_double(residual) << ','
          << format_double(residual * n * n) << '\n';
    }
  }
  return 0;
}

int cmd_asymptotics_scaling(const GlobalOptions& global, double c, double alpha,
                            const std::vector<int>& n_list) {
  OutputSink sink(global.output);
  std::ostream& out = sink.stream();
  out << "n,alpha,c,theta,exact,asymptote,ratio\n";
  for (int n : n_list) {
    const double theta = c * std::pow(static_cast<double>(n), alpha);
    const double exact = ewens::formulas::expected_inversions({n, theta}).value;
    const double asymptote = ewens::formulas::scaling_regime_asymptote(n, c, alpha);
    out << n << ',' << format_double(alpha) << ',' << format_double(c) << ','
        << format_double(theta) << ',' << format_double(exact) << ',' << format_double(asymptote)
        << ',' << format_double(exact / asymptote) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ewens-distributed random permutations: exact inversion statistics, "
      "sampling and verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value config file; flags override");

  GlobalOptions global;
  app.add_option("--seed", global.seed, "random seed (default 0)");
  app.add_option("--stream", global.stream, "independent substream id (default 0)");
  app.add_option("--output", global.output, "write to this file instead of stdout");
  app.add_option("--format", global.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bool dump_config = false;
  app.add_flag("--dump-config", dump_config, "print the effective config and exit");

  // sample
  auto* sample = app.add_subcommand("sample", "draw P_theta permutations");
  sample->fallthrough();
  int sample_n = 0;
  std::string sample_theta;
  std::uint64_t sample_count = 1;
  std::string sample_notation = "oneline";
  sample->add_option("--n", sample_n, "permutation size (>= 3)")->required();
  sample->add_option("--theta", sample_theta, "tilting parameter >= 0")->required();
  sample->add_option("--count", sample_count, "number of draws (default 1)");
  sample->add_option("--notation", sample_notation, "oneline or cycles");

  // exact
  auto* exact = app.add_subcommand("exact", "closed-form / exact rational evaluation");
  exact->fallthrough();
  int exact_n = 0;
  std::string exact_theta, exact_pair;
  bool exact_rational = false, exact_force = false;
  exact->add_option("--n", exact_n, "permutation size (>= 3)")->required();
  exact->add_option("--theta", exact_theta, "theta as decimal or p/q")->required();
  exact->add_option("--pair", exact_pair, "pair i,j for the pair probability");
  exact->add_flag("--rational", exact_rational, "certify through the enumeration oracle");
  exact->add_flag("--force", exact_force, "allow n = 11 enumeration");

  // certify
  auto* certify = app.add_subcommand("certify", "run the exact certification sweep");
  certify->fallthrough();
  int certify_n_max = 0;
  std::string certify_grid = "0,1/2,1,2,10,1000";
  std::string certify_tables;
  bool certify_force = false;
  certify->add_option("--n-max", certify_n_max, "certify n = 3..n_max")->required();
  certify->add_option("--theta-grid", certify_grid, "comma list of rational thetas");
  certify->add_option("--export-tables", certify_tables,
                      "write coefficient tables to PREFIX_{pair,total}_n.csv");
  certify->add_flag("--force", certify_force, "allow n = 11 enumeration");

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo checks against the closed forms");
  mc->fallthrough();
  int mc_n = 0, mc_m = 1;
  std::string mc_theta, mc_pair, mc_check = "inversions";
  std::uint64_t mc_samples = 0;
  double mc_zmax = 4.0;
  mc->add_option("--n", mc_n, "permutation size (>= 3)")->required();
  mc->add_option("--theta", mc_theta, "tilting parameter >= 0")->required();
  mc->add_option("--samples", mc_samples, "sample count (>= 2)")->required();
  mc->add_option("--pair", mc_pair, "pair i,j");
  mc->add_option("--check", mc_check, "inversions, pair, fixed-points, cycles or all");
  mc->add_option("--m", mc_m, "cycle length for --check cycles");
  mc->add_option("--z-max", mc_zmax, "failure threshold on |z| (default 4)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV of statistics across a theta grid");
  sweep->fallthrough();
  int sweep_n = 0, sweep_steps = 0;
  double sweep_from = 0.0, sweep_to = 0.0;
  std::string sweep_pair;
  bool sweep_derivatives = false;
  sweep->add_option("--n", sweep_n, "permutation size (>= 3)")->required();
  sweep->add_option("--from", sweep_from, "theta grid start (>= 0)")->required();
  sweep->add_option("--to", sweep_to, "theta grid end")->required();
  sweep->add_option("--steps", sweep_steps, "grid points (>= 2)")->required();
  sweep->add_option("--pair", sweep_pair, "pair i,j (default: expected inversions)");
  sweep->add_flag("--derivatives", sweep_derivatives, "add derivative1, derivative2 columns");

  // asymptotics
  auto* asym = app.add_subcommand("asymptotics", "expansion residuals and scaling regimes");
  asym->require_subcommand(1);
  auto* expansion = asym->add_subcommand("expansion", "large-n expansion residuals");
  expansion->fallthrough();
  double expansion_theta = 0.0;
  std::vector<int> expansion_n{50, 100, 200, 400};
  std::string expansion_stat = "both";
  expansion->add_option("--theta", expansion_theta, "fixed theta >= 0")->required();
  expansion->add_option("--n", expansion_n, "comma list of sizes")->delimiter(',');
  expansion->add_option("--stat", expansion_stat, "pair, expected or both");
  auto* scaling = asym->add_subcommand("scaling", "theta = c n^alpha regimes");
  scaling->fallthrough();
  double scaling_c = 1.0, scaling_alpha = 1.0;
  std::vector<int> scaling_n{2000};
  scaling->add_option("--c", scaling_c, "scale c > 0")->required();
  scaling->add_option("--alpha", scaling_alpha, "exponent alpha")->required();
  scaling->add_option("--n", scaling_n, "comma list of sizes")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (dump_config) {
    std::cout << app.config_to_str(true, false);
    return 0;
  }

  try {
    if (app.got_subcommand(sample)) {
      return cmd_sample(global, sample_n, sample_theta, sample_count, sample_notation);
    }
    if (app.got_subcommand(exact)) {
      return cmd_exact(global, exact_n, exact_theta, exact_pair, exact_rational, exact_force);
    }
    if (app.got_subcommand(certify)) {
      return cmd_certify(global, certify_n_max, certify_grid, certify_force, certify_tables);
    }
    if (app.got_subcommand(mc)) {
      return cmd_mc(global, mc_n, mc_theta, mc_pair, mc_samples, mc_check, mc_m, mc_zmax);
    }
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(global, sweep_n, sweep_from, sweep_to, sweep_steps, sweep_pair,
                       sweep_derivatives);
    }
    if (asym->got_subcommand(expansion)) {
      return cmd_asymptotics_expansion(global, expansion_theta, expansion_n, expansion_stat);
    }
    if (asym->got_subcommand(scaling)) {
      return cmd_asymptotics_scaling(global, scaling_c, scaling_alpha, scaling_n);
    }
  } catch (const ewens::capability_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
