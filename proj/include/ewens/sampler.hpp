#pragma once

#include <span>
#include <vector>

#include "ewens/permutation.hpp"
#include "ewens/rng.hpp"

namespace ewens {

// Parameters of the Ewens distribution P_theta on S_n: probability of pi
// proportional to theta^{N(pi)} with N the cycle count. theta = 0 is the
// uniform distribution on n-cycles, theta = 1 uniform on S_n, and
// theta -> infinity concentrates on the identity.
struct EwensParams {
  int n = 0;
  double theta = 0.0;
};

// Throws std::invalid_argument unless n >= 3 and theta is finite and >= 0.
// n >= 3 is the standing assumption of every distributional formula here;
// structural permutation operations have no such restriction.
void validate(const EwensParams& params);

// Restaurant seating after some arrivals. Tables appear in opening order;
// within a table, the person after position t (cyclically) is the one
// sitting to the left of the person at position t. Reading each table as a
// cycle therefore gives the permutation restricted to the seated labels.
struct SeatingState {
  std::vector<std::vector<int>> tables;
  int seated_count = 0;
};

// Permutation encoded by a seating: sigma(i) = left seatmate of i, with a
// person alone at a table their own seatmate. Labels must be 1..n for some n.
Permutation to_permutation(const SeatingState& state);

// Draws one P_theta-distributed permutation via the restaurant construction:
// persons 1..n arrive in natural order; arrival m+1 opens a new table with
// probability theta/(theta+m) and otherwise sits to the left of a uniformly
// chosen seated person (probability 1/(theta+m) each). One uniform variate
// is consumed per arrival, so streams are reproducible.
Permutation sample_ewens(const EwensParams& params, RandomSeed seed);

// Same draw from an already-positioned generator (advances it by n-1
// variates). This is the hot path for Monte Carlo substreams.
Permutation sample_ewens(const EwensParams& params, SplitMix64& rng);

// Same construction with an explicit arrival order (any permutation of [n]).
// The result is still P_theta-distributed; natural order reproduces
// sample_ewens draw for draw.
Permutation sample_ewens_with_order(const EwensParams& params,
                                    std::span<const int> arrival_order,
                                    RandomSeed seed);

// Final seating of a natural-order run, for inspecting the table structure.
// to_permutation(sample_seating(p, s)) == sample_ewens(p, s).
SeatingState sample_seating(const EwensParams& params, RandomSeed seed);

// One natural-order run observed after every arrival: returns (S_1,...,S_n)
// with S_m the permutation of [m] seated so far. Consistency: deleting
// label m from the cycles of S_m gives exactly the cycles of S_{m-1}.
std::vector<Permutation> sample_consistent_chain(const EwensParams& params, RandomSeed seed);

}  // namespace ewens
