#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chainconic/chain.hpp"

namespace chainconic {

enum class CarrierSeparation { KInsideL, KOutsideL, LIsLine };

// "k-inside", "k-outside", "l-line".
std::string_view to_string(CarrierSeparation separation);
std::optional<CarrierSeparation> parse_separation(std::string_view text);

struct GeneratorProfile {
  std::vector<std::size_t> n_range = default_n_range();
  CarrierSeparation separation = CarrierSeparation::KInsideL;
  // Parameters are p/q with |p|, |q| <= grid_bound.
  std::int64_t grid_bound = 12;
  // Minimum gap between P parameters as a fraction of a full turn; also the
  // minimum relative clearance used by the conditioning checks.
  double min_separation = 0.01;
  std::uint64_t seed = 0;
  std::size_t retry_budget = 1000;

  static std::vector<std::size_t> default_n_range();
  // Throws InvalidArgument: grid_bound < 8, min_separation <= 0, empty range.
  void validate() const;
};

struct GeneratedConfiguration {
  ChainConfiguration<Rational> config;
  // 1 when the first draw was accepted.
  std::size_t attempts = 0;
};

// Deterministic in (n, profile). Each attempt draws from its own stream,
//   stream_seed = splitmix64(splitmix64(splitmix64(seed) ^ tag) ^ n) ^ attempt)
// feeding std::mt19937_64 through a portable bounded-integer draw. Draws that
// hit a degeneracy (or fail conditioning) are discarded. Throws
// ExhaustedRetries once the retry budget is spent and InvalidArgument when n
// is outside the profile range.
GeneratedConfiguration generate_config(std::size_t n, const GeneratorProfile& profile);

ChainConfiguration<Rational> random_config(std::size_t n, const GeneratorProfile& profile);

// Hand-chosen n = 6 configurations: "fig2-ellipse" (c(K) inside c(L)),
// "fig3-parabola" (c(L) a line), "hyperbola" (carriers apart). Representative
// constants, not measured from any figure. Throws UnknownScenario.
ChainConfiguration<Rational> scenario(std::string_view name);

std::span<const std::string_view> scenario_names();

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace chainconic
