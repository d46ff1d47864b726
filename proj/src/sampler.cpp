#include "ewens/sampler.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ewens {

void validate(const EwensParams& params) {
  if (params.n < 3) {
    throw std::invalid_argument("n must be >= 3, got " + std::to_string(params.n));
  }
  if (!(params.theta >= 0.0) || !std::isfinite(params.theta)) {
    throw std::invalid_argument("theta must be finite and >= 0");
  }
}

namespace {

// Incremental seating over a left-neighbor array. left[i] is the person
// sitting to the left of i; a person alone at a table is their own left
// neighbor. O(1) per arrival, so sampling is O(n) before reading out.
struct CrpRun {
  std::vector<int> left;        // 1-based; left[0] unused
  std::vector<int> seated;      // arrival order of seated persons
  std::vector<int> table_heads; // first occupant per table, opening order

  explicit CrpRun(int n)
      : left(static_cast<std::size_t>(n) + 1, 0) {
    seated.reserve(static_cast<std::size_t>(n));
  }

  void seat(int person, double theta, SplitMix64& rng) {
    const int m = static_cast<int>(seated.size());
    if (m == 0) {
      open_table(person);
    } else {
      // Single partitioned draw: v < theta opens a table, otherwise
      // floor(v - theta) picks the host among the m seated persons.
      const double v = rng.next_unit() * (theta + static_cast<double>(m));
      if (v < theta) {
        open_table(person);
      } else {
        auto idx = static_cast<std::size_t>(v - theta);
        if (idx >= seated.size()) idx = seated.size() - 1;  // guard the u -> 1 edge
        const int host = seated[idx];
        left[static_cast<std::size_t>(person)] = left[static_cast<std::size_t>(host)];
        left[static_cast<std::size_t>(host)] = person;
      }
    }
    seated.push_back(person);
  }

  void open_table(int person) {
    left[static_cast<std::size_t>(person)] = person;
    table_heads.push_back(person);
  }
};

void check_arrival_order(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("arrival_order must have length n");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("arrival_order is not a permutation of [n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

}  // namespace

Permutation to_permutation(const SeatingState& state) {
  std::vector<int> images(static_cast<std::size_t>(state.seated_count), 0);
  for (const auto& table : state.tables) {
    const std::size_t len = table.size();
    for (std::size_t t = 0; t < len; ++t) {
      const int person = table[t];
      const int left_mate = table[(t + 1) % len];
      if (person < 1 || person > state.seated_count) {
        throw std::invalid_argument("seating labels must be 1..seated_count");
      }
      images[static_cast<std::size_t>(person - 1)] = left_mate;
    }
  }
  return make_permutation(images);
}

Permutation sample_ewens_with_order(const EwensParams& params,
                                    std::span<const int> arrival_order,
                                    RandomSeed seed) {
  validate(params);
  check_arrival_order(arrival_order, params.n);
  SplitMix64 rng(seed);
  CrpRun run(params.n);
  for (int person : arrival_order) run.seat(person, params.theta, rng);
  return Permutation::from_images_unchecked(
      std::vector<int>(run.left.begin() + 1, run.left.end()));
}

Permutation sample_ewens(const EwensParams& params, RandomSeed seed) {
  validate(params);
  SplitMix64 rng(seed);
  return sample_ewens(params, rng);
}

Permutation sample_ewens(const EwensParams& params, SplitMix64& rng) {
  validate(params);
  CrpRun run(params.n);
  for (int person = 1; person <= params.n; ++person) run.seat(person, params.theta, rng);
  return Permutation::from_images_unchecked(
      std::vector<int>(run.left.begin() + 1, run.left.end()));
}

SeatingState sample_seating(const EwensParams& params, RandomSeed seed) {
  validate(params);
  SplitMix64 rng(seed);
  CrpRun run(params.n);
  for (int person = 1; person <= params.n; ++person) run.seat(person, params.theta, rng);

  SeatingState state;
  state.seated_count = params.n;
  state.tables.reserve(run.table_heads.size());
  for (int head : run.table_heads) {
    std::vector<int> table;
    int person = head;
    do {
      table.push_back(person);
      person = run.left[static_cast<std::size_t>(person)];
    } while (person != head);
    state.tables.push_back(std::move(table));
  }
  return state;
}

std::vector<Permutation> sample_consistent_chain(const EwensParams& params, RandomSeed seed) {
  validate(params);
  SplitMix64 rng(seed);
  CrpRun run(params.n);
  std::vector<Permutation> chain;
  chain.reserve(static_cast<std::size_t>(params.n));
  for (int person = 1; person <= params.n; ++person) {
    run.seat(person, params.theta, rng);
    // Natural arrivals mean the seated set is exactly [person].
    chain.push_back(Permutation::from_images_unchecked(
        std::vector<int>(run.left.begin() + 1, run.left.begin() + 1 + person)));
  }
  return chain;
}

}  // namespace ewens
