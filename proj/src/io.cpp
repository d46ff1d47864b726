#include "ewens/io.hpp"

#include <cstdio>

namespace ewens {

nlohmann::json to_json(const Permutation& p) {
  nlohmann::json j = nlohmann::json::array();
  for (int v : p.one_line()) j.push_back(v);
  return j;
}

nlohmann::json to_json(const CycleDecomposition& d) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& cycle : d.cycles) j.push_back(cycle);
  return j;
}

Permutation permutation_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation JSON must be an array");
  std::vector<int> images;
  images.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("permutation JSON must hold integers");
    images.push_back(v.get<int>());
  }
  return make_permutation(images);
}

std::string rational_to_string(const BigRational& r) { return r.str(); }

nlohmann::json estimate_report(const mc::EstimateWithError& e, double target,
                               const EwensParams& params, const std::string& statistic) {
  const double z = e.std_error > 0.0 ? (e.mean - target) / e.std_error : 0.0;
  return nlohmann::json{
      {"statistic", statistic},
      {"target", target},
      {"mean", e.mean},
      {"std_error", e.std_error},
      {"z", z},
      {"samples", e.sample_count},
      {"seed", {{"seed", e.seed.seed}, {"stream", e.seed.stream_id}}},
      {"params", {{"n", params.n}, {"theta", params.theta}}},
  };
}

nlohmann::json poisson_report(const mc::PoissonComparison& c, const EwensParams& params,
                              double slack_floor) {
  return nlohmann::json{
      {"statistic", "cycle_count_m" + std::to_string(c.cycle_length)},
      {"target", c.target},
      {"mean", c.empirical_mean},
      {"variance", c.empirical_variance},
      {"std_error", c.std_error},
      {"z", c.z_mean},
      {"samples", c.sample_count},
      {"seed", {{"seed", c.seed.seed}, {"stream", c.seed.stream_id}}},
      {"params", {{"n", params.n}, {"theta", params.theta}}},
      // The Poisson(theta/m) target is an n -> infinity limit; comparisons
      // apply this absolute slack on top of the standard error.
      {"slack", slack_floor},
  };
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return std::string(buffer);
}

}  // namespace ewens
