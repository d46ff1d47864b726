#pragma once

#include <string>

#include "json.hpp"

#include "ewens/montecarlo.hpp"
#include "ewens/permutation.hpp"
#include "ewens/rational.hpp"
#include "ewens/sampler.hpp"

namespace ewens {

// Wire formats: permutations are one-line JSON arrays of 1-based integers
// ([2,3,1]), cycle decompositions arrays of arrays in canonical form,
// rationals "p/q" strings.

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const CycleDecomposition& d);
Permutation permutation_from_json(const nlohmann::json& j);

std::string rational_to_string(const BigRational& r);

// {target, mean, std_error, z, samples, seed, params}
nlohmann::json estimate_report(const mc::EstimateWithError& e, double target,
                               const EwensParams& params, const std::string& statistic);

nlohmann::json poisson_report(const mc::PoissonComparison& c, const EwensParams& params,
                              double slack_floor);

// %.17g with a '.' decimal separator regardless of locale.
std::string format_double(double value);

}  // namespace ewens
