#include "ifr/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ifr/error.hpp"

namespace ifr {

std::string_view to_string(BoundsMode mode) {
  switch (mode) {
    case BoundsMode::InSamplePerYear: return "in-sample";
    case BoundsMode::PooledPanel: return "pooled";
    case BoundsMode::FixedGoalposts: return "goalposts";
  }
  return "?";
}

std::optional<BoundsMode> parse_bounds_mode(std::string_view text) {
  if (text == "in-sample") return BoundsMode::InSamplePerYear;
  if (text == "pooled") return BoundsMode::PooledPanel;
  if (text == "goalposts") return BoundsMode::FixedGoalposts;
  return std::nullopt;
}

void BoundsPolicy::validate() const {
  if (!(degenerate_score >= kScoreMin && degenerate_score <= kScoreMax)) {
    throw ConfigError("degenerate score must lie in [1, 100]");
  }
  if (winsorize) {
    const auto& w = *winsorize;
    if (!(w.lower_percentile >= 0.0 && w.lower_percentile < w.upper_percentile &&
          w.upper_percentile <= 100.0)) {
      throw ConfigError("winsorization percentiles must satisfy 0 <= lo < hi <= 100");
    }
  }
}

namespace {

// Linear interpolation between closest ranks on a sorted sample.
double percentile(const std::vector<double>& sorted, double p) {
  if (sorted.size() == 1) return sorted.front();
  const double pos = p / 100.0 * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

Bounds compute_bounds(std::span<const double> values, const IndicatorDef& indicator,
                      const BoundsPolicy& policy) {
  if (policy.mode == BoundsMode::FixedGoalposts) {
    if (!indicator.fixed_bounds) {
      throw ConfigError("goalposts policy requires declared bounds for indicator " + indicator.id);
    }
    return *indicator.fixed_bounds;
  }
  if (values.empty()) throw DomainError("no values to bound for indicator " + indicator.id);
  if (std::any_of(values.begin(), values.end(), [](double v) { return !std::isfinite(v); })) {
    throw DomainError("non-finite value for indicator " + indicator.id);
  }
  if (policy.winsorize) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return {percentile(sorted, policy.winsorize->lower_percentile),
            percentile(sorted, policy.winsorize->upper_percentile)};
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {*lo, *hi};
}

NormalizedValue normalize_value(double x, Bounds bounds, Orientation orientation,
                                const BoundsPolicy& policy) {
  if (!std::isfinite(x)) throw DomainError("cannot normalize a non-finite value");
  if (!(bounds.lower <= bounds.upper)) throw DomainError("bounds must satisfy min <= max");
  if (bounds.lower == bounds.upper) return {policy.degenerate_score, true};

  x = std::clamp(x, bounds.lower, bounds.upper);
  const double span = bounds.upper - bounds.lower;
  const double distance = orientation == Orientation::Positive ? x - bounds.lower : bounds.upper - x;
  const double score = kScoreMin + distance / span * (kScoreMax - kScoreMin);
  return {std::clamp(score, kScoreMin, kScoreMax), false};
}

std::vector<IndicatorScore> normalize_dataset(const Dataset& dataset, const HierarchySpec& spec,
                                              const BoundsPolicy& policy) {
  policy.validate();

  // Group present values by bounds scope: (indicator, year) or (indicator).
  const bool per_year = policy.mode == BoundsMode::InSamplePerYear;
  std::map<std::pair<std::string, int>, std::vector<double>> samples;
  for (const auto& o : dataset.observations()) {
    if (!o.value) continue;
    samples[{o.indicator_id, per_year ? o.year : 0}].push_back(*o.value);
  }

  std::map<std::pair<std::string, int>, Bounds> bounds;
  for (const auto& [scope, values] : samples) {
    const auto* ind = spec.find_indicator(scope.first);
    if (!ind) throw UnknownIndicatorError({scope.first});
    bounds.emplace(scope, compute_bounds(values, *ind, policy));
  }

  std::vector<IndicatorScore> out;
  out.reserve(dataset.size());
  for (const auto& o : dataset.observations()) {
    if (!o.value) continue;
    const auto* ind = spec.find_indicator(o.indicator_id);
    const auto b = bounds.at({o.indicator_id, per_year ? o.year : 0});
    const auto n = normalize_value(*o.value, b, ind->orientation, policy);
    out.push_back({o.country, o.year, o.indicator_id, n.score, b, n.degenerate});
  }
  return out;
}

}  // namespace ifr
