#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "ewens/rational.hpp"

namespace ewens::oracle {

// Exhaustive enumeration is the certification oracle and is deliberately
// capped: S_10 (3.6M permutations) streams in well under a minute, S_11 is
// the opt-in ceiling, beyond that the closed forms are the only route.
inline constexpr int kEnumerationCap = 10;
inline constexpr int kEnumerationHardCap = 11;

// a^{i,j}_{n,k}: number of permutations of [n] with exactly k cycles in
// which (i,j) is inverted, for k = 1..n.
struct PairCoefficientTable {
  int n = 0;
  int i = 0;
  int j = 0;
  std::vector<std::uint64_t> counts;  // index k, counts[0] unused

  std::uint64_t at(int k) const { return counts[static_cast<std::size_t>(k)]; }
};

// b_{n,k} = sum over pairs i<j of a^{i,j}_{n,k}; equivalently the total
// inversion count over all permutations of [n] with k cycles.
struct TotalCoefficientTable {
  int n = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(int k) const { return counts[static_cast<std::size_t>(k)]; }
};

// Full enumeration of S_n. force admits n = kEnumerationHardCap.
// Throws capability_error outside the admitted range, std::invalid_argument
// on a bad pair.
PairCoefficientTable enumerate_pair_coefficients(int n, int i, int j, bool force = false);

// All pair tables from a single enumeration pass, ordered (1,2), (1,3),
// ..., (1,n), (2,3), ...
std::vector<PairCoefficientTable> enumerate_all_pair_coefficients(int n, bool force = false);

TotalCoefficientTable enumerate_total_coefficients(int n, bool force = false);

// P_theta((i,j) inverted) by enumeration: sum_k a_k theta^k / theta^(n)
// for theta > 0; the theta = 0 convention restricts to single-cycle
// permutations with weight 1/(n-1)!.
BigRational exact_pair_probability(int n, int i, int j, const BigRational& theta, bool force = false);

// E_theta|Inv| by enumeration: sum_k b_k theta^k / theta^(n), same
// theta = 0 convention.
BigRational exact_expected_inversions(int n, const BigRational& theta, bool force = false);

// b_{n,1}: total inversions over all n-cycles (OEIS A227404); equals
// (n-1)! n(3n-1)/12.
BigInteger total_cyclic_inversions(int n, bool force = false);

// Cycle-count histogram of S_n from the enumeration pass; must match the
// unsigned Stirling numbers of the first kind.
std::map<int, std::uint64_t> stirling_cross_check(int n, bool force = false);

// Unsigned Stirling numbers of the first kind c(n,k) for k = 0..n via the
// recurrence c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k); independent of the
// enumeration path.
std::vector<BigInteger> stirling_first_kind(int n);

// The closed forms evaluated in exact rationals (any n >= 3, any pair,
// theta >= 0). These are the certification targets for the enumeration.
BigRational rising_factorial(const BigRational& theta, int n);
BigRational eq_pair_probability(int n, int i, int j, const BigRational& theta);
BigRational eq_pair_probability_partial_fractions(int n, int i, int j, const BigRational& theta);
BigRational eq_expected_inversions(int n, const BigRational& theta);
BigRational eq_expected_inversions_partial_fractions(int n, const BigRational& theta);

// CSV export, headers "n,i,j,k,count" and "n,k,count".
void write_csv(const PairCoefficientTable& table, std::ostream& out);
void write_csv(const TotalCoefficientTable& table, std::ostream& out);

}  // namespace ewens::oracle
