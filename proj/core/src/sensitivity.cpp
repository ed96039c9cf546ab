#include "ifr/sensitivity.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ifr/error.hpp"
#include "ifr/philox.hpp"

namespace ifr {

std::string_view to_string(WeightLevel level) {
  switch (level) {
    case WeightLevel::Indicator: return "indicator";
    case WeightLevel::SubElement: return "sub_element";
    case WeightLevel::Element: return "element";
  }
  return "?";
}

std::optional<WeightLevel> parse_weight_level(std::string_view text) {
  if (text == "indicator") return WeightLevel::Indicator;
  if (text == "sub_element") return WeightLevel::SubElement;
  if (text == "element") return WeightLevel::Element;
  return std::nullopt;
}

void SensitivityConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (!(std::isfinite(sigma) && sigma >= 0.0)) throw ConfigError("sigma must be finite and >= 0");
}

namespace {

std::vector<double> draw_group(const SensitivityConfig& config, std::uint64_t trial,
                               std::string_view group, std::span<const std::string> members) {
  std::vector<double> log_factor(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    log_factor[i] =
        config.sigma == 0.0
            ? 0.0
            : config.sigma * rng::keyed_standard_normal(config.seed, trial, group, members[i]);
  }
  // Shift by the max before exponentiating; the ratio is unchanged.
  const double top = *std::max_element(log_factor.begin(), log_factor.end());
  std::vector<double> w(members.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(log_factor[i] - top);
    total += w[i];
  }
  for (auto& x : w) x /= total;
  return w;
}

// Brings the input onto 1..n with tied entries sharing their average rank.
std::vector<double> fractional_ranks(std::span<const double> values, bool& has_ties) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    if (j > i) has_ties = true;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

int resolve_year(const Dataset& dataset, std::optional<int> year) {
  if (year) return *year;
  if (dataset.years().empty()) throw DomainError("dataset has no observations");
  return *dataset.years().rbegin();
}

std::vector<std::size_t> cells_for_year(const ScoringPanel& panel, int year) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < panel.cells().size(); ++c) {
    if (panel.cells()[c].second == year) out.push_back(c);
  }
  return out;
}

std::vector<double> as_doubles(const std::vector<std::size_t>& ranks) {
  return {ranks.begin(), ranks.end()};
}

}  // namespace

WeightDraw perturb_weights(const HierarchySpec& spec, const SensitivityConfig& config,
                           std::uint64_t trial_index) {
  WeightDraw draw;
  if (config.levels.contains(WeightLevel::Indicator)) {
    for (const auto& sub : spec.sub_elements) {
      draw.groups[sub.id] = draw_group(config, trial_index, sub.id, sub.indicator_ids);
    }
  }
  if (config.levels.contains(WeightLevel::SubElement)) {
    for (auto element : kElements) {
      std::vector<std::string> members;
      for (const auto* sub : spec.sub_elements_of(element)) members.push_back(sub->id);
      if (members.empty()) continue;
      const std::string group(element.code());
      draw.groups[group] = draw_group(config, trial_index, group, members);
    }
  }
  if (config.levels.contains(WeightLevel::Element)) {
    std::vector<std::string> members;
    for (auto element : kElements) members.emplace_back(element.code());
    const std::string group(kNfriGroup);
    draw.groups[group] = draw_group(config, trial_index, group, members);
  }
  return draw;
}

std::vector<std::size_t> competition_ranks(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<std::size_t> ranks(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    ranks[order[i]] = (i > 0 && scores[order[i]] == scores[order[i - 1]]) ? ranks[order[i - 1]] : i + 1;
  }
  return ranks;
}

double spearman_rho(std::span<const double> ranks_a, std::span<const double> ranks_b) {
  if (ranks_a.size() != ranks_b.size()) throw DomainError("rank vectors differ in length");
  const std::size_t n = ranks_a.size();
  if (n < 2) throw DomainError("spearman_rho needs at least two entries");

  bool ties = false;
  const auto a = fractional_ranks(ranks_a, ties);
  const auto b = fractional_ranks(ranks_b, ties);
  const double nd = static_cast<double>(n);

  if (!ties) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
    return std::clamp(1.0 - 6.0 * d2 / (nd * (nd * nd - 1.0)), -1.0, 1.0);
  }

  const double mean = (nd + 1.0) / 2.0;  // fractional ranks always average (n+1)/2
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - mean) * (b[i] - mean);
    saa += (a[i] - mean) * (a[i] - mean);
    sbb += (b[i] - mean) * (b[i] - mean);
  }
  if (saa == 0.0 && sbb == 0.0) return 1.0;
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

RobustnessReport run_sensitivity(const Dataset& dataset, const HierarchySpec& spec,
                                 const BoundsPolicy& bounds, const MissingDataPolicy& missing,
                                 const SensitivityConfig& config) {
  config.validate();
  missing.validate();

  RobustnessReport report;
  report.config = config;
  report.year = resolve_year(dataset, config.year);

  const ScoringPanel panel(dataset, spec, bounds);
  SensitivityConfig equal = config;
  equal.sigma = 0.0;
  const WeightDraw equal_weights = perturb_weights(spec, equal, 0);

  std::vector<std::size_t> ranked;  // panel cell indices
  std::vector<double> baseline_scores;
  for (auto c : cells_for_year(panel, report.year)) {
    if (const auto s = panel.weighted_nfri(c, missing, equal_weights)) {
      ranked.push_back(c);
      baseline_scores.push_back(*s);
    } else {
      report.unranked.push_back(panel.cells()[c].first);
    }
  }
  if (ranked.size() < 2) {
    throw DomainError("sensitivity analysis needs at least two countries with NFRI in " +
                      std::to_string(report.year));
  }
  const auto baseline = competition_ranks(baseline_scores);
  const auto baseline_d = as_doubles(baseline);

  struct TrialResult {
    std::vector<std::size_t> ranks;
    double rho = 1.0;
  };
  std::vector<TrialResult> trials(config.trials);

  auto run_trial = [&](std::size_t t) {
    const auto weights = perturb_weights(spec, config, t);
    std::vector<double> scores(ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const auto s = panel.weighted_nfri(ranked[i], missing, weights);
      if (!s) throw std::logic_error("perturbed weights changed NFRI availability");
      scores[i] = *s;
    }
    trials[t].ranks = competition_ranks(scores);
    trials[t].rho = spearman_rho(baseline_d, as_doubles(trials[t].ranks));
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads,
                                                           static_cast<unsigned>(config.trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < config.trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t t = next++; t < config.trials; t = next++) {
            try {
              run_trial(t);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  // Accumulate in trial order so the result is independent of scheduling.
  std::vector<CountryRobustness> rows(ranked.size());
  std::vector<double> shift_sum(ranked.size(), 0.0);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    rows[i].country = panel.cells()[ranked[i]].first;
    rows[i].baseline_rank = rows[i].min_rank = rows[i].max_rank = baseline[i];
  }
  double rho_sum = 0.0;
  report.min_spearman = 1.0;
  for (const auto& trial : trials) {
    rho_sum += trial.rho;
    report.min_spearman = std::min(report.min_spearman, trial.rho);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const auto r = trial.ranks[i];
      rows[i].min_rank = std::min(rows[i].min_rank, r);
      rows[i].max_rank = std::max(rows[i].max_rank, r);
      shift_sum[i] += std::abs(static_cast<double>(r) - static_cast<double>(baseline[i]));
    }
  }
  report.mean_spearman = rho_sum / static_cast<double>(trials.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].mean_abs_shift = shift_sum[i] / static_cast<double>(trials.size());
  }
  std::sort(rows.begin(), rows.end(), [](const CountryRobustness& a, const CountryRobustness& b) {
    return std::tie(a.baseline_rank, a.country) < std::tie(b.baseline_rank, b.country);
  });
  report.countries = std::move(rows);
  std::sort(report.unranked.begin(), report.unranked.end());
  return report;
}

SwitchMatrix normalization_switch_analysis(const Dataset& dataset, const HierarchySpec& spec,
                                           const MissingDataPolicy& missing,
                                           std::span<const BoundsPolicy> policies,
                                           std::optional<int> year) {
  if (policies.size() < 2) throw ConfigError("normalization switch needs at least two policies");
  missing.validate();

  SwitchMatrix out;
  out.policies.assign(policies.begin(), policies.end());
  out.year = resolve_year(dataset, year);

  // country -> NFRI under each policy
  std::map<std::string, std::vector<MaybeScore>> nfri_by_country;
  for (std::size_t p = 0; p < policies.size(); ++p) {
    const ScoringPanel panel(dataset, spec, policies[p]);
    for (auto c : cells_for_year(panel, out.year)) {
      auto& slot = nfri_by_country[panel.cells()[c].first];
      slot.resize(policies.size());
      slot[p] = panel.scorecard(c, missing).nfri;
    }
  }

  std::vector<std::vector<double>> columns(policies.size());
  for (const auto& [country, scores] : nfri_by_country) {
    if (!std::all_of(scores.begin(), scores.end(), [](const MaybeScore& s) { return s.has_value(); })) {
      continue;
    }
    out.countries.push_back(country);
    for (std::size_t p = 0; p < policies.size(); ++p) columns[p].push_back(*scores[p]);
  }

  std::vector<std::vector<double>> ranks;
  for (const auto& col : columns) ranks.push_back(as_doubles(competition_ranks(col)));

  out.rho.assign(policies.size(), std::vector<double>(policies.size(), 1.0));
  for (std::size_t i = 0; i < policies.size(); ++i) {
    for (std::size_t j = i + 1; j < policies.size(); ++j) {
      out.rho[i][j] = out.rho[j][i] = spearman_rho(ranks[i], ranks[j]);
    }
  }
  return out;
}

}  // namespace ifr
