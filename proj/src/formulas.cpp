#include "ewens/formulas.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ewens::formulas {

namespace {

void check_pair(int n, int i, int j) {
  if (n < 3) throw std::invalid_argument("n must be >= 3, got " + std::to_string(n));
  if (i < 1 || j > n || i >= j) {
    throw std::invalid_argument("pair: need 1 <= i < j <= n, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j));
  }
}

void check_n(int n) {
  if (n < 3) throw std::invalid_argument("n must be >= 3, got " + std::to_string(n));
}

void check_order(int m) {
  if (m < 1) throw std::invalid_argument("derivative order m must be >= 1");
}

double factorial(int m) {
  double f = 1.0;
  for (int k = 2; k <= m; ++k) f *= static_cast<double>(k);
  return f;
}

}  // namespace

double rising_factorial(double theta, int n) {
  if (theta < 0.0) throw std::invalid_argument("rising_factorial: theta must be >= 0");
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be >= 0");
  double product = 1.0;
  for (int k = 0; k < n; ++k) product *= theta + static_cast<double>(k);
  return product;
}

std::int64_t binomial(std::int64_t n, int k) {
  if (k < 0 || n < k) return 0;
  std::int64_t result = 1;
  for (int t = 1; t <= k; ++t) {
    result = result * (n - static_cast<std::int64_t>(k) + t) / t;
  }
  return result;
}

PairProbabilityResult pair_inversion_probability(const EwensParams& params, int i, int j) {
  validate(params);
  check_pair(params.n, i, j);
  const double n = params.n;
  const double theta = params.theta;
  const double l = j - i;

  PairProbabilityResult r;
  r.form_a_value = (theta * (n - l) + static_cast<double>(binomial(params.n - 1, 2)) + l - 1.0) /
                   ((theta + n - 1.0) * (theta + n - 2.0));
  r.form_b_value = n * (n - 2.0 * l + 1.0) / (2.0 * (theta + n - 1.0)) -
                   (n - 1.0) * (n - 2.0 * l) / (2.0 * (theta + n - 2.0));
  r.value = r.form_a_value;
  return r;
}

ExpectedInversionsResult expected_inversions(const EwensParams& params) {
  validate(params);
  const double n = params.n;
  const double theta = params.theta;

  ExpectedInversionsResult r;
  r.form_a_value = (theta / 4.0 * static_cast<double>(binomial(2LL * params.n, 3)) +
                    (3.0 * n - 1.0) / 2.0 * static_cast<double>(binomial(params.n, 3))) /
                   ((theta + n - 1.0) * (theta + n - 2.0));
  r.form_b_value = (n + 1.0) * n * n * (n - 1.0) / (12.0 * (theta + n - 1.0)) -
                   n * (n - 1.0) * (n - 1.0) * (n - 2.0) / (12.0 * (theta + n - 2.0));
  r.value = r.form_a_value;
  return r;
}

double pair_probability_derivative(const EwensParams& params, int i, int j, int m) {
  validate(params);
  check_pair(params.n, i, j);
  check_order(m);
  const double n = params.n;
  const double theta = params.theta;
  const double l = j - i;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial(m) / 2.0 *
         (n * (n - 2.0 * l + 1.0) / std::pow(theta + n - 1.0, m + 1) -
          (n - 1.0) * (n - 2.0 * l) / std::pow(theta + n - 2.0, m + 1));
}

double expected_inversions_derivative(const EwensParams& params, int m) {
  validate(params);
  check_order(m);
  const double n = params.n;
  const double theta = params.theta;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial(m) / 12.0 * n * (n - 1.0) *
         ((n + 1.0) * n / std::pow(theta + n - 1.0, m + 1) -
          (n - 1.0) * (n - 2.0) / std::pow(theta + n - 2.0, m + 1));
}

bool is_pair_probability_decreasing(int n, int i, int j) {
  check_pair(n, i, j);
  return j - i >= 2;
}

bool is_expected_inversions_convex(int n) {
  check_n(n);
  return n >= 5;
}

bool is_pair_probability_completely_monotone(int n, int i, int j) {
  check_pair(n, i, j);
  return 2 * (j - i) >= n;
}

std::int64_t theta_infinity_limit_pair(int n, int i, int j) {
  check_pair(n, i, j);
  return static_cast<std::int64_t>(n) - (j - i);
}

double theta_infinity_limit_expected(int n) {
  check_n(n);
  return static_cast<double>(binomial(2LL * n, 3)) / 4.0;
}

double asymptotic_pair_probability(int n, int i, int j, double theta) {
  check_pair(n, i, j);
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("theta must be finite and >= 0");
  }
  const double l = j - i;
  return 0.5 + (1.0 - theta) * l / (static_cast<double>(n) * static_cast<double>(n));
}

double asymptotic_expected_inversions(int n, double theta) {
  check_n(n);
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("theta must be finite and >= 0");
  }
  const double nd = n;
  return nd * (nd - 1.0) / 4.0 + (1.0 - theta) * nd / 6.0 + theta * (theta - 1.0) / 12.0;
}

double scaling_regime_asymptote(int n, double c, double alpha) {
  check_n(n);
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("scaling: c must be finite and > 0");
  }
  const double nd = n;
  if (alpha > 1.0) return std::pow(nd, 3.0 - alpha) / (3.0 * c);
  if (alpha == 1.0) return (4.0 * c + 3.0) * nd * nd / (12.0 * (c + 1.0) * (c + 1.0));
  return nd * nd / 4.0;
}

}  // namespace ewens::formulas
