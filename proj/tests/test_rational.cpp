#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ewens/rational.hpp"

using namespace ewens;

TEST_CASE("construction reduces and normalizes") {
  CHECK(BigRational(5, 10).str() == "1/2");
  CHECK(BigRational(-4, 8).str() == "-1/2");
  CHECK(BigRational(3, -6).str() == "-1/2");
  CHECK(BigRational(7).str() == "7");
  CHECK(BigRational(0, 5).str() == "0");
  CHECK_THROWS_AS(BigRational(1, 0), std::invalid_argument);
}

TEST_CASE("from_string accepts integers, fractions and decimals") {
  CHECK(BigRational::from_string("1000") == BigRational(1000));
  CHECK(BigRational::from_string("5/10") == BigRational(1, 2));
  CHECK(BigRational::from_string("-3/4") == BigRational(-3, 4));
  CHECK(BigRational::from_string("2.5") == BigRational(5, 2));
  CHECK(BigRational::from_string("0.125") == BigRational(1, 8));
  CHECK(BigRational::from_string("-0.25") == BigRational(-1, 4));
  CHECK_THROWS_AS(BigRational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::from_string("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::from_string("1.2.3"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  const BigRational half(1, 2);
  const BigRational third(1, 3);
  CHECK(half + third == BigRational(5, 6));
  CHECK(half - third == BigRational(1, 6));
  CHECK(half * third == BigRational(1, 6));
  CHECK(half / third == BigRational(3, 2));
  CHECK(-half == BigRational(-1, 2));
  CHECK(half < BigRational(2, 3));
  CHECK_THROWS_AS(half / BigRational(0), std::invalid_argument);
}

TEST_CASE("pow, factorial, binomial") {
  CHECK(pow(BigRational(2, 3), 0) == BigRational(1));
  CHECK(pow(BigRational(2, 3), 3) == BigRational(8, 27));
  CHECK(pow(BigRational(10), 9) == BigRational(1000000000LL));
  CHECK(factorial_big(0) == 1);
  CHECK(factorial_big(10) == 3628800);
  CHECK(binomial_big(6, 3) == 20);
  CHECK(binomial_big(40, 3) == 9880);
}

TEST_CASE("to_double and big values") {
  CHECK(BigRational(1, 4).to_double() == 0.25);
  // 1000^8 exceeds 64 bits; exact arithmetic must carry it
  const BigRational big = pow(BigRational(1000), 8);
  CHECK(big.str() == "1000000000000000000000000");
}
