#include "ifr/aggregate.hpp"

#include <algorithm>
#include <unordered_map>

#include "ifr/error.hpp"

namespace ifr {

void MissingDataPolicy::validate() const {
  if (!(coverage_threshold > 0.0 && coverage_threshold <= 1.0)) {
    throw ConfigError("coverage threshold must lie in (0, 1]");
  }
}

namespace {

bool passes(std::size_t available, std::size_t total, const MissingDataPolicy& policy) {
  if (total == 0 || available == 0) return false;
  return static_cast<double>(available) / static_cast<double>(total) >= policy.coverage_threshold;
}

double mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

MaybeScore gated_mean(std::span<const double> available, std::size_t total,
                      const MissingDataPolicy& policy) {
  if (!passes(available.size(), total, policy)) return std::nullopt;
  return mean(available);
}

// Children are aligned with weights; missing children drop out and the
// remaining weights are renormalized.
MaybeScore gated_weighted_mean(std::span<const MaybeScore> children,
                               const std::vector<double>* weights,
                               const MissingDataPolicy& policy) {
  std::size_t available = 0;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i]) continue;
    ++available;
    const double w = weights ? (*weights)[i] : 1.0;
    num += w * *children[i];
    den += w;
  }
  if (!passes(available, children.size(), policy)) return std::nullopt;
  return num / den;
}

MaybeScore mean_if_all(std::initializer_list<MaybeScore> operands) {
  double sum = 0.0;
  for (const auto& s : operands) {
    if (!s) return std::nullopt;
    sum += *s;
  }
  return sum / static_cast<double>(operands.size());
}

}  // namespace

MaybeScore score_sub_element(std::span<const double> available, std::size_t total,
                             const MissingDataPolicy& policy) {
  return gated_mean(available, total, policy);
}

MaybeScore score_element(std::span<const double> available, std::size_t total,
                         const MissingDataPolicy& policy) {
  return gated_mean(available, total, policy);
}

ActorScores actor_readiness(const ElementScores& e) {
  ActorScores out;
  for (auto actor : kActors) {
    out.values[static_cast<std::size_t>(actor)] =
        mean_if_all({e[ElementId(actor, Theme::Resilience)], e[ElementId(actor, Theme::AdaptiveCapacity)]});
  }
  return out;
}

ThematicScores thematic_indexes(const ElementScores& e) {
  auto over_actors = [&](Theme theme) {
    return mean_if_all({e[ElementId(Actor::Government, theme)], e[ElementId(Actor::Business, theme)],
                        e[ElementId(Actor::Citizens, theme)]});
  };
  return {over_actors(Theme::Resilience), over_actors(Theme::AdaptiveCapacity)};
}

NfriResult nfri(const ElementScores& elements, const MissingDataPolicy& policy) {
  NfriResult out;
  const auto thematic = thematic_indexes(elements);
  const auto actors = actor_readiness(elements);
  out.via_thematic = mean_if_all({thematic.nri, thematic.nai});
  out.via_actors = mean_if_all({actors.values[0], actors.values[1], actors.values[2]});
  if (out.via_thematic && out.via_actors) {
    out.path_gap = std::abs(*out.via_thematic - *out.via_actors);
  }

  std::vector<double> present;
  for (const auto& s : elements.values) {
    if (s) present.push_back(*s);
  }
  if (present.size() == kElementCount) {
    out.value = mean(present);
  } else if (!policy.element_required_for_nfri) {
    out.value = gated_mean(present, kElementCount, policy);
  }
  return out;
}

std::string_view to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::Nfri: return "nfri";
    case ScoreKind::Nri: return "nri";
    case ScoreKind::Nai: return "nai";
    case ScoreKind::Government: return "gov";
    case ScoreKind::Business: return "bus";
    case ScoreKind::Citizens: return "cit";
    case ScoreKind::GR: return "gr";
    case ScoreKind::GA: return "ga";
    case ScoreKind::BR: return "br";
    case ScoreKind::BA: return "ba";
    case ScoreKind::CR: return "cr";
    case ScoreKind::CA: return "ca";
  }
  return "?";
}

std::optional<ScoreKind> parse_score_kind(std::string_view text) {
  for (int k = 0; k <= static_cast<int>(ScoreKind::CA); ++k) {
    const auto kind = static_cast<ScoreKind>(k);
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

MaybeScore ScoreCard::score(ScoreKind kind) const {
  switch (kind) {
    case ScoreKind::Nfri: return nfri;
    case ScoreKind::Nri: return nri;
    case ScoreKind::Nai: return nai;
    case ScoreKind::Government: return actors[Actor::Government];
    case ScoreKind::Business: return actors[Actor::Business];
    case ScoreKind::Citizens: return actors[Actor::Citizens];
    default: break;
  }
  const auto offset = static_cast<std::size_t>(kind) - static_cast<std::size_t>(ScoreKind::GR);
  return elements.values[offset];
}

ScoringPanel::ScoringPanel(const Dataset& dataset, const HierarchySpec& spec,
                           const BoundsPolicy& bounds)
    : spec_(spec), cells_(dataset.cells()) {
  std::unordered_map<std::string, std::size_t> indicator_index;
  for (std::size_t i = 0; i < spec.indicators.size(); ++i) {
    indicator_index.emplace(spec.indicators[i].id, i);
  }
  for (const auto& sub : spec.sub_elements) {
    SubNode node{sub.id, {}};
    for (const auto& id : sub.indicator_ids) node.indicators.push_back(indicator_index.at(id));
    element_subs_[sub.element.index()].push_back(subs_.size());
    subs_.push_back(std::move(node));
  }

  std::map<CountryYear, std::size_t> cell_index;
  for (std::size_t c = 0; c < cells_.size(); ++c) cell_index.emplace(cells_[c], c);
  scores_.assign(cells_.size(), Row(spec.indicators.size()));
  degenerate_.assign(cells_.size(), std::vector<bool>(spec.indicators.size(), false));
  for (const auto& s : normalize_dataset(dataset, spec, bounds)) {
    const auto c = cell_index.at({s.country, s.year});
    const auto i = indicator_index.at(s.indicator_id);
    scores_[c][i] = s.score;
    degenerate_[c][i] = s.degenerate;
  }
}

ScoreCard ScoringPanel::scorecard(std::size_t cell, const MissingDataPolicy& policy) const {
  const auto& row = scores_.at(cell);
  ScoreCard card;
  card.country = cells_[cell].first;
  card.year = cells_[cell].second;

  std::size_t present_indicators = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i]) continue;
    ++present_indicators;
    card.indicator_scores.emplace(spec_.indicators[i].id, *row[i]);
    if (degenerate_[cell][i]) card.degenerate_indicators.insert(spec_.indicators[i].id);
  }

  std::vector<MaybeScore> sub_scores(subs_.size());
  std::size_t present_subs = 0;
  std::vector<double> available;
  for (std::size_t s = 0; s < subs_.size(); ++s) {
    available.clear();
    for (auto i : subs_[s].indicators) {
      if (row[i]) available.push_back(*row[i]);
    }
    sub_scores[s] = score_sub_element(available, subs_[s].indicators.size(), policy);
    if (sub_scores[s]) ++present_subs;
    card.sub_element_scores.emplace(subs_[s].id, sub_scores[s]);
  }

  std::size_t present_elements = 0;
  for (std::size_t e = 0; e < kElementCount; ++e) {
    available.clear();
    for (auto s : element_subs_[e]) {
      if (sub_scores[s]) available.push_back(*sub_scores[s]);
    }
    card.elements.values[e] = score_element(available, element_subs_[e].size(), policy);
    if (card.elements.values[e]) ++present_elements;
  }

  card.actors = actor_readiness(card.elements);
  const auto thematic = thematic_indexes(card.elements);
  card.nri = thematic.nri;
  card.nai = thematic.nai;
  const auto total = nfri(card.elements, policy);
  card.nfri = total.value;
  card.nfri_via_thematic = total.via_thematic;
  card.nfri_via_actors = total.via_actors;
  card.path_gap = total.path_gap;

  auto ratio = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  card.coverage = {ratio(present_indicators, row.size()), ratio(present_subs, subs_.size()),
                   ratio(present_elements, kElementCount)};
  return card;
}

MaybeScore ScoringPanel::weighted_nfri(std::size_t cell, const MissingDataPolicy& policy,
                                       const WeightDraw& weights) const {
  const auto& row = scores_.at(cell);
  auto lookup = [&](std::string_view group) -> const std::vector<double>* {
    const auto it = weights.groups.find(std::string(group));
    return it == weights.groups.end() ? nullptr : &it->second;
  };

  std::vector<MaybeScore> sub_scores(subs_.size());
  std::vector<MaybeScore> children;
  for (std::size_t s = 0; s < subs_.size(); ++s) {
    children.clear();
    for (auto i : subs_[s].indicators) children.push_back(row[i]);
    sub_scores[s] = gated_weighted_mean(children, lookup(subs_[s].id), policy);
  }

  std::array<MaybeScore, kElementCount> elements{};
  for (std::size_t e = 0; e < kElementCount; ++e) {
    children.clear();
    for (auto s : element_subs_[e]) children.push_back(sub_scores[s]);
    elements[e] = gated_weighted_mean(children, lookup(ElementId::from_index(e).code()), policy);
  }

  const bool complete = std::all_of(elements.begin(), elements.end(),
                                    [](const MaybeScore& s) { return s.has_value(); });
  if (policy.element_required_for_nfri && !complete) return std::nullopt;
  return gated_weighted_mean(elements, lookup(kNfriGroup), policy);
}

std::vector<ScoreCard> build_scorecards(const Dataset& dataset, const HierarchySpec& spec,
                                        const BoundsPolicy& bounds,
                                        const MissingDataPolicy& missing) {
  missing.validate();
  const ScoringPanel panel(dataset, spec, bounds);
  std::vector<ScoreCard> cards;
  cards.reserve(panel.cells().size());
  for (std::size_t c = 0; c < panel.cells().size(); ++c) {
    cards.push_back(panel.scorecard(c, missing));
  }
  return cards;
}

RankTable rank(std::span<const ScoreCard> cards, ScoreKind kind) {
  RankTable table;
  table.kind = kind;
  for (const auto& card : cards) {
    if (const auto s = card.score(kind)) {
      table.rows.push_back({0, card.country, card.year, *s});
    } else {
      table.unranked.emplace_back(card.country, card.year);
    }
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const RankRow& a, const RankRow& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.country != b.country) return a.country < b.country;
    return a.year < b.year;
  });
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    table.rows[i].rank =
        (i > 0 && table.rows[i].score == table.rows[i - 1].score) ? table.rows[i - 1].rank : i + 1;
  }
  std::sort(table.unranked.begin(), table.unranked.end());
  return table;
}

}  // namespace ifr
