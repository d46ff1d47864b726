#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ewens/io.hpp"

using namespace ewens;

TEST_CASE("permutation json wire format") {
  const Permutation p = make_permutation(std::vector<int>{2, 3, 1});
  CHECK(to_json(p).dump() == "[2,3,1]");
  CHECK(permutation_from_json(nlohmann::json::parse("[2,3,1]")) == p);
  CHECK_THROWS_AS(permutation_from_json(nlohmann::json::parse("[2,2,1]")), std::invalid_argument);
  CHECK_THROWS_AS(permutation_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
}

TEST_CASE("cycle decomposition json wire format") {
  const Permutation p = make_permutation(std::vector<int>{2, 1, 4, 3});
  CHECK(to_json(decompose(p)).dump() == "[[1,2],[3,4]]");
}

TEST_CASE("rationals serialize as p/q strings") {
  CHECK(rational_to_string(BigRational(5, 2)) == "5/2");
  CHECK(rational_to_string(BigRational(7)) == "7");
  CHECK(rational_to_string(BigRational(-1, 3)) == "-1/3");
}

TEST_CASE("estimate report carries the full record") {
  mc::EstimateWithError e;
  e.mean = 612.1;
  e.std_error = 0.5;
  e.sample_count = 100000;
  e.seed = {42, 7};
  const auto j = estimate_report(e, 612.5, {50, 1.0}, "inversions");
  CHECK(j.at("target") == 612.5);
  CHECK(j.at("mean") == 612.1);
  CHECK(j.at("std_error") == 0.5);
  CHECK(j.at("z").get<double>() == doctest::Approx(-0.8));
  CHECK(j.at("samples") == 100000);
  CHECK(j.at("seed").at("seed") == 42);
  CHECK(j.at("seed").at("stream") == 7);
  CHECK(j.at("params").at("n") == 50);
  CHECK(j.at("params").at("theta") == 1.0);
}

TEST_CASE("poisson report flags the finite-n slack") {
  mc::PoissonComparison c;
  c.cycle_length = 3;
  c.target = 0.5;
  c.empirical_mean = 0.49;
  c.std_error = 0.003;
  c.seed = {1, 2};
  const auto j = poisson_report(c, {500, 1.5}, 0.01);
  CHECK(j.at("slack") == 0.01);
  CHECK(j.at("statistic") == "cycle_count_m3");
}

TEST_CASE("doubles print with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(612.5) == "612.5");
  CHECK(format_double(2.0 / 3.0) == "0.66666666666666663");
}
