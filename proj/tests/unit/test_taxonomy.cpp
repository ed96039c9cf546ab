#include <doctest.h>

#include <map>
#include <set>

#include "ifr/taxonomy.hpp"

using namespace ifr;

TEST_CASE("element ids form a bijection onto the six codes") {
  std::set<std::string> codes;
  for (auto actor : kActors) {
    for (auto theme : kThemes) {
      const ElementId e(actor, theme);
      codes.insert(std::string(e.code()));
      const auto back = ElementId::from_code(e.code());
      REQUIRE(back);
      CHECK(*back == e);
      CHECK(ElementId::from_index(e.index()) == e);
    }
  }
  CHECK(codes == std::set<std::string>{"GR", "GA", "BR", "BA", "CR", "CA"});
  CHECK(ElementId(Actor::Government, Theme::Resilience).code() == "GR");
  CHECK(ElementId(Actor::Government, Theme::AdaptiveCapacity).code() == "GA");
  CHECK(ElementId(Actor::Business, Theme::Resilience).code() == "BR");
  CHECK(ElementId(Actor::Business, Theme::AdaptiveCapacity).code() == "BA");
  CHECK(ElementId(Actor::Citizens, Theme::Resilience).code() == "CR");
  CHECK(ElementId(Actor::Citizens, Theme::AdaptiveCapacity).code() == "CA");
  CHECK_FALSE(ElementId::from_code("XX"));
  CHECK_FALSE(ElementId::from_code("gr"));
}

// Transcribed by hand from the published indicator list, one entry per
// sub-element heading with the number of bullets beneath it.
const std::map<std::string, std::size_t> kTranscribedBullets = {
    {"GR1", 4}, {"GR2", 2}, {"GR3", 3}, {"GR4", 3}, {"GR5", 4},
    {"GA1", 10}, {"GA2", 3}, {"GA3", 3}, {"GA4", 4}, {"GA5", 1},
    {"BR1", 3}, {"BR2", 1}, {"BR3", 2}, {"BR4", 4}, {"BR5", 2},
    {"BA1", 5}, {"BA2", 7}, {"BA3", 2}, {"BA4", 3}, {"BA6", 1},
    {"CR1", 9}, {"CR2", 1}, {"CR3", 1}, {"CR4", 4},
    {"CA1", 7}, {"CA2", 2}, {"CA3", 2}, {"CA4", 5}, {"CA5", 1},
};
constexpr std::size_t kPinnedIndicatorTotal = 99;

TEST_CASE("default hierarchy matches the published taxonomy") {
  const auto spec = build_default_ifr_hierarchy();

  CHECK(spec.sub_elements.size() == 29);
  CHECK(spec.sub_elements.size() == kDefaultSubElementCount);
  CHECK(spec.indicators.size() == kPinnedIndicatorTotal);
  CHECK(kDefaultIndicatorCount == kPinnedIndicatorTotal);

  std::size_t transcribed_total = 0;
  for (const auto& [id, n] : kTranscribedBullets) transcribed_total += n;
  CHECK(transcribed_total == kPinnedIndicatorTotal);

  std::map<std::string, std::size_t> per_sub;
  for (const auto& sub : spec.sub_elements) per_sub[sub.id] = sub.indicator_ids.size();
  CHECK(per_sub == kTranscribedBullets);

  std::map<std::string, std::size_t> per_element;
  for (const auto& sub : spec.sub_elements) ++per_element[std::string(sub.element.code())];
  CHECK(per_element == std::map<std::string, std::size_t>{
                           {"GR", 5}, {"GA", 5}, {"BR", 5}, {"BA", 5}, {"CR", 4}, {"CA", 5}});

  CHECK(spec.find_sub_element("BA6") != nullptr);
  CHECK(spec.find_sub_element("BA5") == nullptr);
  CHECK(spec.find_sub_element("CR4")->display_name == "Social Capital and Trust");
  CHECK(spec.find_sub_element("GR1")->display_name == "Fiscal Buffers and Monetary Policy Space");
  CHECK(validate_hierarchy(spec).empty());
}

TEST_CASE("default orientations") {
  const auto spec = build_default_ifr_hierarchy();
  CHECK(spec.find_indicator("gr_public_debt_gdp")->orientation == Orientation::Negative);
  CHECK(spec.find_indicator("gr_inflation_rate")->orientation == Orientation::Negative);
  CHECK(spec.find_indicator("ba_rd_spending_gdp")->orientation == Orientation::Positive);
  CHECK(spec.find_indicator("cr_gini")->orientation == Orientation::Negative);
  CHECK(spec.find_indicator("br_informal_economy_gdp")->orientation == Orientation::Negative);

  std::set<std::string> provisional;
  for (const auto& ind : spec.indicators) {
    if (ind.orientation_provisional) {
      provisional.insert(ind.id);
      CHECK(ind.orientation == Orientation::Positive);
    }
  }
  CHECK(provisional == std::set<std::string>{"gr_exchange_rate_flexibility", "gr_trade_openness_gdp",
                                             "ca_urban_population_growth"});
}

TEST_CASE("validate_hierarchy reports each violation") {
  const auto good = build_default_ifr_hierarchy();

  SUBCASE("missing element") {
    auto spec = good;
    std::erase_if(spec.sub_elements, [](const SubElementDef& s) { return s.element.code() == "CA"; });
    std::erase_if(spec.indicators, [](const IndicatorDef& d) { return d.sub_element_id.starts_with("CA"); });
    const auto diags = validate_hierarchy(spec);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message == "missing element CA");
    CHECK(diags[0].subject == "CA");
  }

  SUBCASE("indicator pointing at a nonexistent sub-element") {
    auto spec = good;
    spec.indicators.push_back({"orphan", "Orphan", "ZZ9", Orientation::Positive, "", std::nullopt, false});
    const auto diags = validate_hierarchy(spec);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].subject == "orphan");
  }

  SUBCASE("empty sub-element") {
    auto spec = good;
    spec.sub_elements.push_back({"GR9", ElementId(Actor::Government, Theme::Resilience), "empty", {}});
    const auto diags = validate_hierarchy(spec);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].subject == "GR9");
  }

  SUBCASE("duplicate indicator id") {
    auto spec = good;
    auto copy = spec.indicators.front();
    spec.indicators.push_back(copy);
    const auto diags = validate_hierarchy(spec);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags[0].subject == copy.id);
  }

  SUBCASE("indicator shared by two sub-elements") {
    auto spec = good;
    spec.sub_elements[1].indicator_ids.push_back(spec.sub_elements[0].indicator_ids[0]);
    const auto diags = validate_hierarchy(spec);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].subject == spec.sub_elements[0].indicator_ids[0]);
  }

  SUBCASE("inverted bounds") {
    auto spec = good;
    spec.indicators[3].fixed_bounds = Bounds{5.0, 5.0};
    const auto diags = validate_hierarchy(spec);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].subject == spec.indicators[3].id);
  }

  SUBCASE("diagnostics are sorted by subject") {
    auto spec = good;
    spec.indicators.push_back({"zzz", "", "nope", Orientation::Positive, "", std::nullopt, false});
    spec.indicators.push_back({"aaa", "", "nope", Orientation::Positive, "", std::nullopt, false});
    const auto diags = validate_hierarchy(spec);
    REQUIRE(diags.size() == 2);
    CHECK(diags[0].subject == "aaa");
    CHECK(diags[1].subject == "zzz");
  }
}
