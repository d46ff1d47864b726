#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "ewens/errors.hpp"
#include "ewens/formulas.hpp"
#include "ewens/oracle.hpp"
#include "test_util.hpp"

using namespace ewens;
using namespace ewens::oracle;

namespace {

const std::vector<BigRational> kThetaGrid{BigRational(0),  BigRational(1, 2), BigRational(1),
                                          BigRational(2),  BigRational(10),   BigRational(1000)};

}  // namespace

TEST_CASE("enumeration range is enforced") {
  CHECK_THROWS_AS(enumerate_total_coefficients(2), capability_error);
  CHECK_THROWS_AS(enumerate_total_coefficients(11), capability_error);
  CHECK_THROWS_AS(enumerate_total_coefficients(12, /*force=*/true), capability_error);
  CHECK_THROWS_AS(enumerate_pair_coefficients(5, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(exact_pair_probability(4, 1, 2, BigRational(-1)), std::invalid_argument);
}

TEST_CASE("stirling cross-check") {
  const auto histogram3 = stirling_cross_check(3);
  CHECK(histogram3.at(1) == 2);
  CHECK(histogram3.at(2) == 3);
  CHECK(histogram3.at(3) == 1);
  CHECK(stirling_cross_check(4).at(1) == 6);

  for (int n = 3; n <= 8; ++n) {
    const auto histogram = stirling_cross_check(n);
    const auto stirling = stirling_first_kind(n);
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) {
      REQUIRE(BigInteger(static_cast<unsigned long>(histogram.at(k))) ==
              stirling[static_cast<std::size_t>(k)]);
      total += histogram.at(k);
    }
    CHECK(BigInteger(static_cast<unsigned long>(total)) == factorial_big(static_cast<unsigned>(n)));
  }
}

TEST_CASE("pair coefficient tables") {
  const auto table = enumerate_pair_coefficients(5, 2, 4);
  CHECK(table.at(4) == 3);  // a_{n,n-1} = n - j + i
  CHECK(table.at(5) == 0);

  const auto table3 = enumerate_pair_coefficients(3, 1, 2);
  std::uint64_t sum3 = 0;
  for (int k = 1; k <= 3; ++k) sum3 += table3.at(k);
  CHECK(sum3 == 3);  // half of 3!

  for (int n = 3; n <= 7; ++n) {
    std::uint64_t half_fact = 1;
    for (int f = 2; f <= n; ++f) half_fact *= static_cast<std::uint64_t>(f);
    half_fact /= 2;
    for (const auto& t : enumerate_all_pair_coefficients(n)) {
      REQUIRE(t.at(n) == 0);
      REQUIRE(t.at(n - 1) == static_cast<std::uint64_t>(n - t.j + t.i));
      std::uint64_t sum = 0;
      for (int k = 1; k <= n; ++k) sum += t.at(k);
      REQUIRE(sum == half_fact);
    }
  }
}

TEST_CASE("single-pair and all-pairs enumerations agree") {
  for (int n : {4, 6}) {
    const auto all = enumerate_all_pair_coefficients(n);
    for (const auto& t : all) {
      const auto single = enumerate_pair_coefficients(n, t.i, t.j);
      REQUIRE(single.counts == t.counts);
    }
  }
}

TEST_CASE("total coefficient tables") {
  const auto table3 = enumerate_total_coefficients(3);
  CHECK(table3.at(2) == 5);
  CHECK(table3.at(3) == 0);
  CHECK(enumerate_total_coefficients(4).at(3) == 14);

  for (int n = 3; n <= 7; ++n) {
    const auto totals = enumerate_total_coefficients(n);
    CHECK(totals.at(n) == 0);
    const BigInteger b_top = binomial_big(static_cast<unsigned>(2 * n), 3) / 4;
    CHECK(BigInteger(static_cast<unsigned long>(totals.at(n - 1))) == b_top);

    // b is the pairwise sum of the a tables
    const auto pairs = enumerate_all_pair_coefficients(n);
    for (int k = 1; k <= n; ++k) {
      std::uint64_t sum = 0;
      for (const auto& t : pairs) sum += t.at(k);
      REQUIRE(sum == totals.at(k));
    }
  }
}

TEST_CASE("exact probabilities and expectations") {
  CHECK(exact_pair_probability(4, 1, 3, BigRational(1)) == BigRational(1, 2));
  CHECK(exact_pair_probability(5, 1, 4, BigRational(0)) == BigRational(2, 3));
  CHECK(exact_pair_probability(4, 1, 3, BigRational(2)) == BigRational(2, 5));
  CHECK(exact_expected_inversions(4, BigRational(1)) == BigRational(3));
  CHECK(exact_expected_inversions(3, BigRational(0)) == BigRational(2));
  CHECK(exact_expected_inversions(4, BigRational(2)) == BigRational(5, 2));
}

TEST_CASE("enumeration certifies the closed forms exactly") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& theta : kThetaGrid) {
      BigRational pair_sum(0);
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const BigRational enumerated = exact_pair_probability(n, i, j, theta);
          REQUIRE(enumerated == eq_pair_probability(n, i, j, theta));
          REQUIRE(enumerated == eq_pair_probability_partial_fractions(n, i, j, theta));
          pair_sum += enumerated;
        }
      }
      const BigRational expected = exact_expected_inversions(n, theta);
      REQUIRE(expected == eq_expected_inversions(n, theta));
      REQUIRE(expected == eq_expected_inversions_partial_fractions(n, theta));
      REQUIRE(expected == pair_sum);
    }
  }
}

TEST_CASE("float formulas agree with the exact rationals") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& theta : kThetaGrid) {
      const double theta_d = theta.to_double();
      const double exact_e = eq_expected_inversions(n, theta).to_double();
      const double float_e = formulas::expected_inversions({n, theta_d}).value;
      REQUIRE(std::fabs(float_e - exact_e) <= 1e-12 * std::max(1.0, std::fabs(exact_e)));
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const double exact_p = eq_pair_probability(n, i, j, theta).to_double();
          const double float_p = formulas::pair_inversion_probability({n, theta_d}, i, j).value;
          REQUIRE(std::fabs(float_p - exact_p) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("total cyclic inversions (OEIS A227404 values)") {
  CHECK(total_cyclic_inversions(3) == 4);
  CHECK(total_cyclic_inversions(4) == 22);

  for (int n = 3; n <= 7; ++n) {
    // (n-1)! * n(3n-1)/12
    const BigInteger expected =
        factorial_big(static_cast<unsigned>(n - 1)) * n * (3 * n - 1) / 12;
    CHECK(total_cyclic_inversions(n) == expected);
  }

  // direct enumeration of single-cycle permutations
  BigInteger direct(0);
  testutil::for_each_permutation(4, [&](const Permutation& p) {
    if (cycle_count(p) == 1) direct += static_cast<unsigned long>(inversion_count(p));
  });
  CHECK(direct == total_cyclic_inversions(4));
}

TEST_CASE("theta = 0 convention is the single-cycle restriction") {
  for (int n : {3, 5}) {
    // direct: uniform over (n-1)! cyclic permutations
    std::uint64_t cyclic = 0, inverted = 0;
    testutil::for_each_permutation(n, [&](const Permutation& p) {
      if (cycle_count(p) == 1) {
        ++cyclic;
        if (is_inversion(p, 1, n - 1)) ++inverted;
      }
    });
    const BigRational direct(static_cast<long long>(inverted), static_cast<long long>(cyclic));
    CHECK(exact_pair_probability(n, 1, n - 1, BigRational(0)) == direct);
  }
}

TEST_CASE("csv export formats") {
  std::ostringstream pair_out;
  write_csv(enumerate_pair_coefficients(3, 1, 2), pair_out);
  CHECK(pair_out.str() == "n,i,j,k,count\n3,1,2,1,1\n3,1,2,2,2\n3,1,2,3,0\n");

  std::ostringstream total_out;
  write_csv(enumerate_total_coefficients(3), total_out);
  CHECK(total_out.str() == "n,k,count\n3,1,4\n3,2,5\n3,3,0\n");
}

TEST_CASE("rational rising factorial") {
  CHECK(oracle::rising_factorial(BigRational(1), 5) == BigRational(120));
  CHECK(oracle::rising_factorial(BigRational(1, 2), 2) == BigRational(3, 4));
  CHECK(oracle::rising_factorial(BigRational(7), 0) == BigRational(1));
}
