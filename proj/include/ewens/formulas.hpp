#pragma once

#include <cstdint>

#include "ewens/sampler.hpp"

namespace ewens::formulas {

// Closed forms for inversion statistics under P_theta. Everything here is
// 64-bit floating point; the exact rational counterparts live in the oracle.
//
// Both displayed algebraic forms of each formula are evaluated and returned,
// with value taken from the rational-quotient form. Writing l = j-i:
//
//   P_theta((i,j) inverted) = (theta(n-l) + C(n-1,2) + l - 1)
//                             / ((theta+n-1)(theta+n-2))                 [form a]
//                           = n(n-2l+1)/(2(theta+n-1))
//                             - (n-1)(n-2l)/(2(theta+n-2))               [form b]
//
//   E_theta|Inv| = (theta/4 C(2n,3) + (3n-1)/2 C(n,3))
//                  / ((theta+n-1)(theta+n-2))                            [form a]
//                = (n+1)n^2(n-1)/(12(theta+n-1))
//                  - n(n-1)^2(n-2)/(12(theta+n-2))                       [form b]

struct PairProbabilityResult {
  double value = 0.0;         // = form_a_value
  double form_a_value = 0.0;  // rational-quotient form
  double form_b_value = 0.0;  // partial-fraction form
};

struct ExpectedInversionsResult {
  double value = 0.0;
  double form_a_value = 0.0;
  double form_b_value = 0.0;
};

// theta^(n) = product_{k=0}^{n-1} (theta+k); empty product is 1.
double rising_factorial(double theta, int n);

// Exact integer binomial for the small arguments used here (k <= 3).
std::int64_t binomial(std::int64_t n, int k);

PairProbabilityResult pair_inversion_probability(const EwensParams& params, int i, int j);

ExpectedInversionsResult expected_inversions(const EwensParams& params);

// m-th theta-derivative of the pair probability from the closed form
//   p^(m)(theta) = (-1)^m m!/2 ( n(n-2l+1)/(theta+n-1)^{m+1}
//                              - (n-1)(n-2l)/(theta+n-2)^{m+1} ).
// m >= 1; use pair_inversion_probability for the value itself.
double pair_probability_derivative(const EwensParams& params, int i, int j, int m);

// m-th theta-derivative of the expected inversion count,
//   g^(m)(theta) = (-1)^m m!/12 n(n-1) ( (n+1)n/(theta+n-1)^{m+1}
//                                      - (n-1)(n-2)/(theta+n-2)^{m+1} ).
double expected_inversions_derivative(const EwensParams& params, int m);

// The pair probability is decreasing in theta iff j-i >= 2.
bool is_pair_probability_decreasing(int n, int i, int j);

// E_theta|Inv| is convex in theta iff n >= 5.
bool is_expected_inversions_convex(int n);

// The pair probability is completely monotone in theta iff j-i >= n/2
// (exact comparison 2(j-i) >= n, boundary inclusive).
bool is_pair_probability_completely_monotone(int n, int i, int j);

// lim theta -> inf of theta * P_theta((i,j) inverted) = n - (j-i).
std::int64_t theta_infinity_limit_pair(int n, int i, int j);

// lim theta -> inf of theta * E_theta|Inv| = C(2n,3)/4.
double theta_infinity_limit_expected(int n);

// Explicit terms of the large-n expansion: 1/2 + (1-theta)(j-i)/n^2.
double asymptotic_pair_probability(int n, int i, int j, double theta);

// Explicit terms of the large-n expansion:
// n(n-1)/4 + (1-theta)n/6 + theta(theta-1)/12.
double asymptotic_expected_inversions(int n, double theta);

// Leading term of E_{c n^alpha}|Inv| as n grows:
//   alpha > 1: n^{3-alpha}/(3c)
//   alpha = 1: (4c+3) n^2 / (12(c+1)^2)
//   alpha < 1: n^2/4
double scaling_regime_asymptote(int n, double c, double alpha);

}  // namespace ewens::formulas
