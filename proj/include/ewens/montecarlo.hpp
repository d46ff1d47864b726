#pragma once

#include <cstdint>
#include <functional>

#include "ewens/permutation.hpp"
#include "ewens/rng.hpp"
#include "ewens/sampler.hpp"

namespace ewens::mc {

// Point estimate with its standard error (sample standard deviation over
// sqrt(sample_count)). Reproducible: the seed is part of the record.
struct EstimateWithError {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t sample_count = 0;
  RandomSeed seed;
};

// Empirical moments of the number of m-cycles against the Poisson(theta/m)
// limit. The limit statement is asymptotic in n, so acceptance checks add a
// small absolute slack on top of the standard error.
struct PoissonComparison {
  int cycle_length = 0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;
  double target = 0.0;  // theta / m, exactly
  double z_mean = 0.0;  // (empirical_mean - target) / std_error
  double std_error = 0.0;
  std::uint64_t sample_count = 0;
  RandomSeed seed;
};

// Mean of an arbitrary per-permutation statistic over independent samples.
// Sample s draws from the substream (seed, stream_id, s), and batches merge
// in fixed order, so the result is bit-identical for any worker count.
// threads = 0 means auto (EWENS_THREADS-capped). samples must be >= 2.
EstimateWithError estimate_statistic(const EwensParams& params, std::uint64_t samples,
                                     RandomSeed seed,
                                     const std::function<double(const Permutation&)>& statistic,
                                     int threads = 0);

EstimateWithError estimate_expected_inversions(const EwensParams& params, std::uint64_t samples,
                                               RandomSeed seed, int threads = 0);

// Empirical frequency of the event "(i,j) inverted"; binomial standard error.
EstimateWithError estimate_pair_probability(const EwensParams& params, int i, int j,
                                            std::uint64_t samples, RandomSeed seed,
                                            int threads = 0);

PoissonComparison estimate_cycle_length_counts(const EwensParams& params, int m,
                                               std::uint64_t samples, RandomSeed seed,
                                               int threads = 0);

EstimateWithError estimate_fixed_points(const EwensParams& params, std::uint64_t samples,
                                        RandomSeed seed, int threads = 0);

}  // namespace ewens::mc
