#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifr/ingest.hpp"
#include "ifr/normalize.hpp"
#include "ifr/taxonomy.hpp"

namespace ifr {

using MaybeScore = std::optional<double>;

struct MissingDataPolicy {
  /// A node is scored only if present children / all children >= this.
  double coverage_threshold = 0.5;
  /// When false, NFRI falls back to a gated mean of whichever elements exist.
  bool element_required_for_nfri = true;

  void validate() const;  // ConfigError unless threshold in (0, 1]

  friend bool operator==(const MissingDataPolicy&, const MissingDataPolicy&) = default;
};

/// Mean of the available child scores if coverage passes the threshold.
MaybeScore score_sub_element(std::span<const double> available, std::size_t total,
                             const MissingDataPolicy& policy);
MaybeScore score_element(std::span<const double> available, std::size_t total,
                         const MissingDataPolicy& policy);

/// Indexed by ElementId::index(): GR, GA, BR, BA, CR, CA.
struct ElementScores {
  std::array<MaybeScore, kElementCount> values{};

  MaybeScore& operator[](ElementId e) { return values[e.index()]; }
  const MaybeScore& operator[](ElementId e) const { return values[e.index()]; }
  friend bool operator==(const ElementScores&, const ElementScores&) = default;
};

struct ActorScores {
  std::array<MaybeScore, 3> values{};

  const MaybeScore& operator[](Actor a) const { return values[static_cast<std::size_t>(a)]; }
  friend bool operator==(const ActorScores&, const ActorScores&) = default;
};

struct ThematicScores {
  MaybeScore nri;
  MaybeScore nai;
  friend bool operator==(const ThematicScores&, const ThematicScores&) = default;
};

/// Government = mean(GR, GA) and so on; missing if either element is.
ActorScores actor_readiness(const ElementScores& elements);
/// NRI = mean(GR, BR, CR), NAI = mean(GA, BA, CA); missing if any operand is.
ThematicScores thematic_indexes(const ElementScores& elements);

struct NfriResult {
  MaybeScore value;        // flat mean of the six elements
  MaybeScore via_thematic; // mean(NRI, NAI)
  MaybeScore via_actors;   // mean of the three actor readiness scores
  /// |via_thematic - via_actors| when both exist.
  std::optional<double> path_gap;
};

NfriResult nfri(const ElementScores& elements, const MissingDataPolicy& policy);

enum class ScoreKind { Nfri, Nri, Nai, Government, Business, Citizens, GR, GA, BR, BA, CR, CA };

std::string_view to_string(ScoreKind kind);
std::optional<ScoreKind> parse_score_kind(std::string_view text);

struct LevelCoverage {
  double indicators = 0.0;
  double sub_elements = 0.0;
  double elements = 0.0;
  friend bool operator==(const LevelCoverage&, const LevelCoverage&) = default;
};

struct ScoreCard {
  std::string country;
  int year = 0;
  std::map<std::string, double> indicator_scores;
  std::set<std::string> degenerate_indicators;
  std::map<std::string, MaybeScore> sub_element_scores;
  ElementScores elements;
  ActorScores actors;
  MaybeScore nri;
  MaybeScore nai;
  MaybeScore nfri;
  MaybeScore nfri_via_thematic;
  MaybeScore nfri_via_actors;
  std::optional<double> path_gap;
  LevelCoverage coverage;

  MaybeScore score(ScoreKind kind) const;
  friend bool operator==(const ScoreCard&, const ScoreCard&) = default;
};

/// Per-group weights. Keys: a sub-element id weights its indicators (in
/// listing order); an element code weights that element's sub-elements (in
/// hierarchy order); kNfriGroup weights the six elements (canonical order).
/// A group absent from the map is equally weighted.
struct WeightDraw {
  std::map<std::string, std::vector<double>> groups;
  friend bool operator==(const WeightDraw&, const WeightDraw&) = default;
};

inline constexpr std::string_view kNfriGroup = "NFRI";

/// Normalized scores laid out against a hierarchy so the tree can be
/// re-aggregated cheaply (once for the baseline, once per sensitivity trial).
class ScoringPanel {
 public:
  ScoringPanel(const Dataset& dataset, const HierarchySpec& spec, const BoundsPolicy& bounds);

  std::span<const CountryYear> cells() const { return cells_; }
  const HierarchySpec& spec() const { return spec_; }

  ScoreCard scorecard(std::size_t cell, const MissingDataPolicy& policy) const;

  /// NFRI under perturbed weights: weighted gated means at every level,
  /// NFRI as the weighted mean of the six elements.
  MaybeScore weighted_nfri(std::size_t cell, const MissingDataPolicy& policy,
                           const WeightDraw& weights) const;

 private:
  struct SubNode {
    std::string id;
    std::vector<std::size_t> indicators;
  };
  using Row = std::vector<MaybeScore>;

  HierarchySpec spec_;
  std::vector<CountryYear> cells_;
  std::vector<SubNode> subs_;
  std::array<std::vector<std::size_t>, kElementCount> element_subs_;
  std::vector<Row> scores_;                 // [cell][indicator]
  std::vector<std::vector<bool>> degenerate_;  // [cell][indicator]
};

/// One ScoreCard per (country, year) with at least one observation, sorted by
/// country then year.
std::vector<ScoreCard> build_scorecards(const Dataset& dataset, const HierarchySpec& spec,
                                        const BoundsPolicy& bounds,
                                        const MissingDataPolicy& missing);

struct RankRow {
  std::size_t rank = 0;
  std::string country;
  int year = 0;
  double score = 0.0;
  friend bool operator==(const RankRow&, const RankRow&) = default;
};

struct RankTable {
  ScoreKind kind = ScoreKind::Nfri;
  std::vector<RankRow> rows;          // score descending, ties by country code
  std::vector<CountryYear> unranked;  // selected score missing
  friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// Competition ranking: tied scores share the smallest rank, the next
/// distinct score ranks 1 + (number of strictly better entries).
RankTable rank(std::span<const ScoreCard> cards, ScoreKind kind);

}  // namespace ifr
