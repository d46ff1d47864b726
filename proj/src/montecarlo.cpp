#include "ewens/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ewens/threading.hpp"

namespace ewens::mc {

namespace {

constexpr std::uint64_t kBatchSize = 4096;

// Welford single-pass accumulator with the standard pairwise merge. Batches
// are merged in index order, which keeps results independent of threading.
struct Welford {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Welford& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double delta = o.mean - mean;
    const std::uint64_t total = count + o.count;
    mean += delta * static_cast<double>(o.count) / static_cast<double>(total);
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) /
                     static_cast<double>(total);
    count = total;
  }

  double variance() const {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  }
};

// Sample s always draws from substream (seed, s), whatever thread runs it;
// per-batch accumulators are merged in index order at the end.
template <typename Statistic>
Welford run_batches(const EwensParams& params, std::uint64_t samples, RandomSeed seed,
                    Statistic&& statistic, int threads) {
  const std::uint64_t batches = (samples + kBatchSize - 1) / kBatchSize;
  if (threads <= 0) threads = worker_count(batches);

  auto run_batch = [&params, &statistic, samples, seed](std::uint64_t batch, Welford& w) {
    const std::uint64_t begin = batch * kBatchSize;
    const std::uint64_t end = std::min(begin + kBatchSize, samples);
    for (std::uint64_t s = begin; s < end; ++s) {
      SplitMix64 rng = SplitMix64::substream(seed, s);
      w.add(statistic(sample_ewens(params, rng)));
    }
  };

  if (threads <= 1) {
    Welford total;
    for (std::uint64_t b = 0; b < batches; ++b) {
      Welford batch_acc;
      run_batch(b, batch_acc);
      total.merge(batch_acc);
    }
    return total;
  }

  std::vector<Welford> per_batch(batches);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t b = next.fetch_add(1); b < batches; b = next.fetch_add(1)) {
        run_batch(b, per_batch[b]);
      }
    });
  }
  for (auto& t : pool) t.join();
  Welford total;
  for (const auto& w : per_batch) total.merge(w);
  return total;
}

void check_samples(std::uint64_t samples) {
  if (samples < 2) throw std::invalid_argument("samples must be >= 2");
}

EstimateWithError to_estimate(const Welford& w, RandomSeed seed) {
  EstimateWithError e;
  e.mean = w.mean;
  e.std_error = std::sqrt(w.variance() / static_cast<double>(w.count));
  e.sample_count = w.count;
  e.seed = seed;
  return e;
}

}  // namespace

EstimateWithError estimate_statistic(const EwensParams& params, std::uint64_t samples,
                                     RandomSeed seed,
                                     const std::function<double(const Permutation&)>& statistic,
                                     int threads) {
  validate(params);
  check_samples(samples);
  Welford w = run_batches(params, samples, seed,
                          [&statistic](const Permutation& p) { return statistic(p); }, threads);
  return to_estimate(w, seed);
}

EstimateWithError estimate_expected_inversions(const EwensParams& params, std::uint64_t samples,
                                               RandomSeed seed, int threads) {
  validate(params);
  check_samples(samples);
  Welford w = run_batches(
      params, samples, seed,
      [](const Permutation& p) { return static_cast<double>(inversion_count(p)); }, threads);
  return to_estimate(w, seed);
}

EstimateWithError estimate_pair_probability(const EwensParams& params, int i, int j,
                                            std::uint64_t samples, RandomSeed seed, int threads) {
  validate(params);
  check_samples(samples);
  if (i < 1 || j > params.n || i >= j) {
    throw std::invalid_argument("pair: need 1 <= i < j <= n");
  }
  Welford w = run_batches(
      params, samples, seed,
      [i, j](const Permutation& p) { return is_inversion(p, i, j) ? 1.0 : 0.0; }, threads);
  EstimateWithError e;
  e.mean = w.mean;
  e.sample_count = w.count;
  e.seed = seed;
  // binomial standard error for a frequency
  e.std_error = std::sqrt(w.mean * (1.0 - w.mean) / static_cast<double>(w.count));
  return e;
}

PoissonComparison estimate_cycle_length_counts(const EwensParams& params, int m,
                                               std::uint64_t samples, RandomSeed seed,
                                               int threads) {
  validate(params);
  check_samples(samples);
  if (m < 1 || m > params.n) {
    throw std::invalid_argument("cycle length m must be in [1, n]");
  }
  Welford w = run_batches(
      params, samples, seed,
      [m](const Permutation& p) {
        const int n = p.size();
        std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
        int hits = 0;
        for (int s = 1; s <= n; ++s) {
          if (visited[static_cast<std::size_t>(s)]) continue;
          int length = 0;
          int t = s;
          while (!visited[static_cast<std::size_t>(t)]) {
            visited[static_cast<std::size_t>(t)] = 1;
            t = p(t);
            ++length;
          }
          if (length == m) ++hits;
        }
        return static_cast<double>(hits);
      },
      threads);
  PoissonComparison c;
  c.cycle_length = m;
  c.empirical_mean = w.mean;
  c.empirical_variance = w.variance();
  c.target = params.theta / static_cast<double>(m);
  c.sample_count = w.count;
  c.seed = seed;
  c.std_error = std::sqrt(w.variance() / static_cast<double>(w.count));
  c.z_mean = c.std_error > 0.0 ? (c.empirical_mean - c.target) / c.std_error : 0.0;
  return c;
}

EstimateWithError estimate_fixed_points(const EwensParams& params, std::uint64_t samples,
                                        RandomSeed seed, int threads) {
  validate(params);
  check_samples(samples);
  Welford w = run_batches(
      params, samples, seed,
      [](const Permutation& p) { return static_cast<double>(fixed_point_count(p)); }, threads);
  return to_estimate(w, seed);
}

}  // namespace ewens::mc
