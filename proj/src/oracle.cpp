#include "ewens/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ewens/errors.hpp"
#include "ewens/threading.hpp"

namespace ewens::oracle {

namespace {

void check_range(int n, bool force) {
  const int cap = force ? kEnumerationHardCap : kEnumerationCap;
  if (n < 3 || n > cap) {
    throw capability_error("enumeration supports 3 <= n <= " + std::to_string(cap) +
                           ", got " + std::to_string(n));
  }
}

void check_pair(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) {
    throw std::invalid_argument("pair: need 1 <= i < j <= n, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j));
  }
}

void check_theta(const BigRational& theta) {
  if (theta.sign() < 0) throw std::invalid_argument("theta must be >= 0");
}

// Streams every permutation of [n] with the given first entry in
// lexicographic order. The visitor receives the one-line word, the position
// array (pos[v] = index of value v, 1-based) and the cycle count.
template <typename Visit>
void for_each_permutation_with_first(int n, int first, Visit&& visit) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  std::vector<char> visited(static_cast<std::size_t>(n) + 1);
  word[0] = first;
  int fill = 1;
  for (int v = 1; v <= n; ++v) {
    if (v != first) word[static_cast<std::size_t>(fill++)] = v;
  }
  do {
    for (int k = 1; k <= n; ++k) pos[static_cast<std::size_t>(word[static_cast<std::size_t>(k - 1)])] = k;
    std::fill(visited.begin(), visited.end(), 0);
    int cycles = 0;
    for (int s = 1; s <= n; ++s) {
      if (visited[static_cast<std::size_t>(s)]) continue;
      ++cycles;
      int t = s;
      while (!visited[static_cast<std::size_t>(t)]) {
        visited[static_cast<std::size_t>(t)] = 1;
        t = word[static_cast<std::size_t>(t - 1)];
      }
    }
    visit(word, pos, cycles);
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

// Folds an accumulator over all of S_n, partitioned by first element across
// worker threads. Accumulators hold integer counts, so the merged result is
// identical for every partitioning.
template <typename Acc>
Acc enumerate_partitioned(int n, const Acc& prototype) {
  const int workers = worker_count(static_cast<std::uint64_t>(n));
  if (workers <= 1) {
    Acc acc = prototype;
    for (int first = 1; first <= n; ++first) {
      for_each_permutation_with_first(n, first,
                                      [&](const auto& w, const auto& p, int c) { acc.visit(w, p, c); });
    }
    return acc;
  }
  std::vector<Acc> parts(static_cast<std::size_t>(n), prototype);
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  std::atomic<int> next_first{1};
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (int first = next_first.fetch_add(1); first <= n; first = next_first.fetch_add(1)) {
        auto& part = parts[static_cast<std::size_t>(first - 1)];
        for_each_permutation_with_first(n, first,
                                        [&](const auto& wd, const auto& p, int c) { part.visit(wd, p, c); });
      }
    });
  }
  for (auto& t : threads) t.join();
  Acc total = prototype;
  for (const auto& part : parts) total.merge(part);
  return total;
}

struct AllPairsAcc {
  int n = 0;
  // counts[pair][k], pairs (i,j) with i<j in lexicographic order
  std::vector<std::vector<std::uint64_t>> counts;

  explicit AllPairsAcc(int n_in)
      : n(n_in),
        counts(static_cast<std::size_t>(n_in) * (n_in - 1) / 2,
               std::vector<std::uint64_t>(static_cast<std::size_t>(n_in) + 1, 0)) {}

  void visit(const std::vector<int>&, const std::vector<int>& pos, int cycles) {
    std::size_t pair = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j, ++pair) {
        if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) {
          ++counts[pair][static_cast<std::size_t>(cycles)];
        }
      }
    }
  }

  void merge(const AllPairsAcc& o) {
    for (std::size_t p = 0; p < counts.size(); ++p) {
      for (std::size_t k = 0; k < counts[p].size(); ++k) counts[p][k] += o.counts[p][k];
    }
  }
};

struct SinglePairAcc {
  int n = 0;
  int i = 0, j = 0;
  std::vector<std::uint64_t> counts;

  SinglePairAcc(int n_in, int i_in, int j_in)
      : n(n_in), i(i_in), j(j_in), counts(static_cast<std::size_t>(n_in) + 1, 0) {}

  void visit(const std::vector<int>&, const std::vector<int>& pos, int cycles) {
    if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) {
      ++counts[static_cast<std::size_t>(cycles)];
    }
  }

  void merge(const SinglePairAcc& o) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += o.counts[k];
  }
};

struct TotalsAcc {
  int n = 0;
  std::vector<std::uint64_t> counts;  // total inversions bucketed by cycle count

  explicit TotalsAcc(int n_in) : n(n_in), counts(static_cast<std::size_t>(n_in) + 1, 0) {}

  void visit(const std::vector<int>&, const std::vector<int>& pos, int cycles) {
    std::uint64_t inversions = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) ++inversions;
      }
    }
    counts[static_cast<std::size_t>(cycles)] += inversions;
  }

  void merge(const TotalsAcc& o) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += o.counts[k];
  }
};

struct CycleHistogramAcc {
  int n = 0;
  std::vector<std::uint64_t> counts;

  explicit CycleHistogramAcc(int n_in) : n(n_in), counts(static_cast<std::size_t>(n_in) + 1, 0) {}

  void visit(const std::vector<int>&, const std::vector<int>&, int cycles) {
    ++counts[static_cast<std::size_t>(cycles)];
  }

  void merge(const CycleHistogramAcc& o) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += o.counts[k];
  }
};

// sum_k coeff[k] theta^k / theta^(n) for theta > 0; the theta = 0
// convention restricts to the k = 1 coefficient with weight 1/(n-1)!.
BigRational weighted_value(const std::vector<std::uint64_t>& coeff, int n, const BigRational& theta) {
  if (theta.is_zero()) {
    return BigRational(BigInteger(static_cast<unsigned long>(coeff[1])),
                       factorial_big(static_cast<unsigned>(n - 1)));
  }
  BigRational numerator(0);
  BigRational theta_power = theta;
  for (int k = 1; k <= n; ++k) {
    numerator +=
        BigRational(BigInteger(static_cast<unsigned long>(coeff[static_cast<std::size_t>(k)]))) * theta_power;
    theta_power *= theta;
  }
  return numerator / rising_factorial(theta, n);
}

}  // namespace

PairCoefficientTable enumerate_pair_coefficients(int n, int i, int j, bool force) {
  check_range(n, force);
  check_pair(n, i, j);
  SinglePairAcc acc = enumerate_partitioned(n, SinglePairAcc(n, i, j));
  PairCoefficientTable table;
  table.n = n;
  table.i = i;
  table.j = j;
  table.counts = std::move(acc.counts);
  return table;
}

std::vector<PairCoefficientTable> enumerate_all_pair_coefficients(int n, bool force) {
  check_range(n, force);
  AllPairsAcc acc = enumerate_partitioned(n, AllPairsAcc(n));
  std::vector<PairCoefficientTable> tables;
  tables.reserve(acc.counts.size());
  std::size_t pair = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++pair) {
      PairCoefficientTable t;
      t.n = n;
      t.i = i;
      t.j = j;
      t.counts = std::move(acc.counts[pair]);
      tables.push_back(std::move(t));
    }
  }
  return tables;
}

TotalCoefficientTable enumerate_total_coefficients(int n, bool force) {
  check_range(n, force);
  TotalsAcc acc = enumerate_partitioned(n, TotalsAcc(n));
  TotalCoefficientTable table;
  table.n = n;
  table.counts = std::move(acc.counts);
  return table;
}

BigRational exact_pair_probability(int n, int i, int j, const BigRational& theta, bool force) {
  check_theta(theta);
  PairCoefficientTable table = enumerate_pair_coefficients(n, i, j, force);
  return weighted_value(table.counts, n, theta);
}

BigRational exact_expected_inversions(int n, const BigRational& theta, bool force) {
  check_theta(theta);
  TotalCoefficientTable table = enumerate_total_coefficients(n, force);
  return weighted_value(table.counts, n, theta);
}

BigInteger total_cyclic_inversions(int n, bool force) {
  TotalCoefficientTable table = enumerate_total_coefficients(n, force);
  return BigInteger(static_cast<unsigned long>(table.at(1)));
}

std::map<int, std::uint64_t> stirling_cross_check(int n, bool force) {
  check_range(n, force);
  CycleHistogramAcc acc = enumerate_partitioned(n, CycleHistogramAcc(n));
  std::map<int, std::uint64_t> histogram;
  for (int k = 1; k <= n; ++k) histogram[k] = acc.counts[static_cast<std::size_t>(k)];
  return histogram;
}

std::vector<BigInteger> stirling_first_kind(int n) {
  if (n < 0) throw std::invalid_argument("stirling_first_kind: n must be >= 0");
  std::vector<BigInteger> row{BigInteger(1)};  // c(0,0) = 1
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInteger> next(static_cast<std::size_t>(m) + 1, BigInteger(0));
    for (int k = 1; k <= m; ++k) {
      next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)];
      if (k < m) next[static_cast<std::size_t>(k)] += BigInteger(m - 1) * row[static_cast<std::size_t>(k)];
    }
    row = std::move(next);
  }
  return row;
}

BigRational rising_factorial(const BigRational& theta, int n) {
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be >= 0");
  BigRational product(1);
  for (int k = 0; k < n; ++k) product *= theta + BigRational(k);
  return product;
}

BigRational eq_pair_probability(int n, int i, int j, const BigRational& theta) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  check_pair(n, i, j);
  check_theta(theta);
  const int l = j - i;
  const BigRational numerator = theta * BigRational(n - l) +
                                BigRational(static_cast<long long>(n - 1) * (n - 2) / 2) +
                                BigRational(l - 1);
  const BigRational denominator = (theta + BigRational(n - 1)) * (theta + BigRational(n - 2));
  return numerator / denominator;
}

BigRational eq_pair_probability_partial_fractions(int n, int i, int j, const BigRational& theta) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  check_pair(n, i, j);
  check_theta(theta);
  const long long l = j - i;
  return BigRational(static_cast<long long>(n) * (n - 2 * l + 1), 2) / (theta + BigRational(n - 1)) -
         BigRational(static_cast<long long>(n - 1) * (n - 2 * l), 2) / (theta + BigRational(n - 2));
}

BigRational eq_expected_inversions(int n, const BigRational& theta) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  check_theta(theta);
  const BigRational quarter_binom(binomial_big(static_cast<unsigned>(2 * n), 3), BigInteger(4));
  const BigRational second(BigInteger(3 * n - 1) * binomial_big(static_cast<unsigned>(n), 3),
                           BigInteger(2));
  const BigRational denominator = (theta + BigRational(n - 1)) * (theta + BigRational(n - 2));
  return (theta * quarter_binom + second) / denominator;
}

BigRational eq_expected_inversions_partial_fractions(int n, const BigRational& theta) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  check_theta(theta);
  const BigInteger nn(n);
  const BigRational first(nn * nn * (nn + 1) * (nn - 1), BigInteger(12));
  const BigRational second(nn * (nn - 1) * (nn - 1) * (nn - 2), BigInteger(12));
  return first / (theta + BigRational(n - 1)) - second / (theta + BigRational(n - 2));
}

void write_csv(const PairCoefficientTable& table, std::ostream& out) {
  out << "n,i,j,k,count\n";
  for (int k = 1; k <= table.n; ++k) {
    out << table.n << ',' << table.i << ',' << table.j << ',' << k << ',' << table.at(k) << '\n';
  }
}

void write_csv(const TotalCoefficientTable& table, std::ostream& out) {
  out << "n,k,count\n";
  for (int k = 1; k <= table.n; ++k) {
    out << table.n << ',' << k << ',' << table.at(k) << '\n';
  }
}

}  // namespace ewens::oracle
