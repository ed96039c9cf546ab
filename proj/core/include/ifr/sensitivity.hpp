#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifr/aggregate.hpp"
#include "ifr/ingest.hpp"
#include "ifr/normalize.hpp"
#include "ifr/taxonomy.hpp"

namespace ifr {

enum class WeightLevel { Indicator, SubElement, Element };

std::string_view to_string(WeightLevel level);
std::optional<WeightLevel> parse_weight_level(std::string_view text);

struct SensitivityConfig {
  std::size_t trials = 1000;
  double sigma = 0.2;
  std::uint64_t seed = 42;
  std::set<WeightLevel> levels = {WeightLevel::Indicator, WeightLevel::SubElement,
                                  WeightLevel::Element};
  /// Cross-section to rank; the latest year in the data when unset.
  std::optional<int> year;
  /// Worker threads for trials. Results do not depend on this.
  unsigned threads = 1;

  void validate() const;  // ConfigError unless trials >= 1, sigma finite and >= 0

  friend bool operator==(const SensitivityConfig&, const SensitivityConfig&) = default;
};

/// Log-normal multiplicative perturbation of the equal weights, one factor
/// exp(sigma * g) per member with g from rng::keyed_standard_normal keyed by
/// (seed, trial, group, member), renormalized per group. sigma == 0 gives
/// exactly 1/k.
WeightDraw perturb_weights(const HierarchySpec& spec, const SensitivityConfig& config,
                           std::uint64_t trial_index);

/// Rank correlation. Inputs are converted to fractional (average) ranks;
/// tie-free inputs use 1 - 6 sum(d^2) / (n (n^2 - 1)), tied inputs the Pearson
/// correlation of the fractional ranks. Two constant vectors give 1, one
/// constant vector gives 0. Throws DomainError if n < 2 or sizes differ.
double spearman_rho(std::span<const double> ranks_a, std::span<const double> ranks_b);

/// 1 + number of strictly larger scores, per entry.
std::vector<std::size_t> competition_ranks(std::span<const double> scores);

struct CountryRobustness {
  std::string country;
  std::size_t baseline_rank = 0;
  std::size_t min_rank = 0;
  std::size_t max_rank = 0;
  double mean_abs_shift = 0.0;
  friend bool operator==(const CountryRobustness&, const CountryRobustness&) = default;
};

struct RobustnessReport {
  SensitivityConfig config;
  int year = 0;
  std::vector<CountryRobustness> countries;  // sorted by baseline rank, then code
  std::vector<std::string> unranked;         // NFRI missing in the baseline
  double mean_spearman = 1.0;
  double min_spearman = 1.0;
  friend bool operator==(const RobustnessReport&, const RobustnessReport&) = default;
};

/// Ranks NFRI under equal weights, then under `trials` perturbed draws, and
/// summarizes the rank movement. Needs at least two ranked countries.
RobustnessReport run_sensitivity(const Dataset& dataset, const HierarchySpec& spec,
                                 const BoundsPolicy& bounds, const MissingDataPolicy& missing,
                                 const SensitivityConfig& config);

struct SwitchMatrix {
  std::vector<BoundsPolicy> policies;
  int year = 0;
  std::vector<std::string> countries;  // ranked under every policy
  std::vector<std::vector<double>> rho;  // symmetric, unit diagonal
};

/// Pairwise Spearman correlation of the NFRI rankings under each bounds
/// policy. Needs at least two policies.
SwitchMatrix normalization_switch_analysis(const Dataset& dataset, const HierarchySpec& spec,
                                           const MissingDataPolicy& missing,
                                           std::span<const BoundsPolicy> policies,
                                           std::optional<int> year = std::nullopt);

}  // namespace ifr
