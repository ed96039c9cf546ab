#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifr/ingest.hpp"
#include "ifr/taxonomy.hpp"

namespace ifr {

enum class BoundsMode {
  InSamplePerYear,  // min/max over one indicator-year cross-section
  PooledPanel,      // min/max over one indicator across all years
  FixedGoalposts,   // declared IndicatorDef::fixed_bounds
};

std::string_view to_string(BoundsMode mode);
std::optional<BoundsMode> parse_bounds_mode(std::string_view text);

/// Optional percentile trimming applied to observed values before bounds
/// are taken. Ignored under FixedGoalposts.
struct Winsorization {
  double lower_percentile = 0.0;
  double upper_percentile = 100.0;

  friend bool operator==(const Winsorization&, const Winsorization&) = default;
};

struct BoundsPolicy {
  BoundsMode mode = BoundsMode::InSamplePerYear;
  double degenerate_score = 50.5;
  std::optional<Winsorization> winsorize;

  /// Throws ConfigError if degenerate_score is outside [1, 100] or the
  /// percentiles are not 0 <= lo < hi <= 100.
  void validate() const;

  friend bool operator==(const BoundsPolicy&, const BoundsPolicy&) = default;
};

inline constexpr double kScoreMin = 1.0;
inline constexpr double kScoreMax = 100.0;

struct IndicatorScore {
  std::string country;
  int year = 0;
  std::string indicator_id;
  double score = 0.0;
  Bounds bounds_used;
  bool degenerate = false;
};

struct NormalizedValue {
  double score = 0.0;
  bool degenerate = false;
};

/// Observed (min, max) for the in-sample policies, declared bounds for
/// goalposts. Throws ConfigError for goalposts without declared bounds and
/// DomainError for an empty or non-finite sample.
Bounds compute_bounds(std::span<const double> values, const IndicatorDef& indicator,
                      const BoundsPolicy& policy);

/// Min-max rescaling to [1, 100]. x is clamped into the bounds first, so
/// goalpost overshoot saturates. min == max yields policy.degenerate_score.
NormalizedValue normalize_value(double x, Bounds bounds, Orientation orientation,
                                const BoundsPolicy& policy);

/// One score per present observation, sorted by (country, year, indicator).
std::vector<IndicatorScore> normalize_dataset(const Dataset& dataset, const HierarchySpec& spec,
                                              const BoundsPolicy& policy);

}  // namespace ifr
