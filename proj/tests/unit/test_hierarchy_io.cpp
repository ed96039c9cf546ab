#include <doctest.h>

#include <random>
#include <string>

#include "ifr/error.hpp"
#include "ifr/taxonomy.hpp"

using namespace ifr;

namespace {

std::string minimal_doc(const std::string& gr1_indicators) {
  std::string doc = R"({"name": "t", "version": "0", "sub_elements": [)";
  doc += R"({"id": "GR1", "element": "GR", "name": "g", "indicators": [)" + gr1_indicators + "]}";
  for (const char* code : {"GA", "BR", "BA", "CR", "CA"}) {
    doc += std::string(R"(, {"id": ")") + code + R"(1", "element": ")" + code +
           R"(", "name": "x", "indicators": [{"id": ")" + code +
           R"(_a", "name": "a", "orientation": "positive", "units": ""}]})";
  }
  return doc + "]}";
}

// Random valid hierarchy in canonical order (indicators listed in
// sub-element order), with optional bounds and provisional flags.
HierarchySpec random_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> subs_per_element(1, 4), inds_per_sub(1, 5), coin(0, 1);
  std::uniform_real_distribution<double> value(-1e6, 1e6);
  HierarchySpec spec;
  spec.name = "random \"spec\" \xC3\xA9";
  spec.version = std::to_string(rng() % 1000);
  int serial = 0;
  for (auto element : kElements) {
    const int n_subs = subs_per_element(rng);
    for (int s = 0; s < n_subs; ++s) {
      SubElementDef sub{std::string(element.code()) + std::to_string(s + 1), element,
                        "sub, " + std::to_string(s), {}};
      const int n_inds = inds_per_sub(rng);
      for (int i = 0; i < n_inds; ++i) {
        IndicatorDef ind;
        ind.id = "ind" + std::to_string(serial++);
        ind.display_name = "Indicator\n" + ind.id;
        ind.sub_element_id = sub.id;
        ind.orientation = coin(rng) ? Orientation::Positive : Orientation::Negative;
        ind.units = coin(rng) ? "percent" : "";
        if (coin(rng)) {
          const double a = value(rng);
          ind.fixed_bounds = Bounds{a, a + 1.0 + std::abs(value(rng))};
        }
        ind.orientation_provisional = coin(rng) == 1;
        sub.indicator_ids.push_back(ind.id);
        spec.indicators.push_back(ind);
      }
      spec.sub_elements.push_back(std::move(sub));
    }
  }
  return spec;
}

}  // namespace

TEST_CASE("default hierarchy round-trips through the document format") {
  const auto spec = build_default_ifr_hierarchy();
  const auto text = serialize_hierarchy(spec);
  const auto back = parse_hierarchy(text);
  CHECK(back == spec);
  CHECK(serialize_hierarchy(back) == text);
}

TEST_CASE("parse(serialize(s)) == s for random valid hierarchies") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = random_spec(rng);
    REQUIRE(validate_hierarchy(spec).empty());
    CHECK(parse_hierarchy(serialize_hierarchy(spec)) == spec);
  }
}

TEST_CASE("minimal document parses") {
  const auto spec = parse_hierarchy(minimal_doc(
      R"({"id": "infl", "name": "Inflation", "orientation": "negative", "units": "%", "bounds": [0, 20]})"));
  CHECK(spec.sub_elements.size() == 6);
  const auto* infl = spec.find_indicator("infl");
  REQUIRE(infl);
  CHECK(infl->sub_element_id == "GR1");
  CHECK(infl->orientation == Orientation::Negative);
  REQUIRE(infl->fixed_bounds);
  CHECK(infl->fixed_bounds->lower == 0.0);
  CHECK(infl->fixed_bounds->upper == 20.0);
}

TEST_CASE("duplicate indicator id is a semantic error naming it") {
  const auto doc = minimal_doc(
      R"({"id": "infl", "orientation": "negative"}, {"id": "infl", "orientation": "negative"})");
  try {
    parse_hierarchy(doc);
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    CHECK(std::string(e.what()).find("infl") != std::string::npos);
  }
}

TEST_CASE("sub-element with no indicators is a semantic error") {
  try {
    parse_hierarchy(minimal_doc(""));
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    CHECK(e.subject() == "GR1");
  }
}

TEST_CASE("unknown element code") {
  std::string doc = minimal_doc(R"({"id": "a", "orientation": "positive"})");
  doc.replace(doc.find(R"("element": "GR")"), 15, R"("element": "GX")");
  try {
    parse_hierarchy(doc);
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    CHECK(e.subject() == "GX");
  }
}

TEST_CASE("a seventh element cannot be expressed and a missing one is reported") {
  std::string doc = minimal_doc(R"({"id": "a", "orientation": "positive"})");
  // drop the CA sub-element
  const auto pos = doc.find(R"(, {"id": "CA1")");
  doc = doc.substr(0, pos) + "]}";
  try {
    parse_hierarchy(doc);
    FAIL("expected SemanticError");
  } catch (const SemanticError& e) {
    CHECK(std::string(e.what()) == "missing element CA");
  }
}

TEST_CASE("bad orientation and missing fields") {
  CHECK_THROWS_AS(parse_hierarchy(minimal_doc(R"({"id": "a", "orientation": "up"})")), SemanticError);
  CHECK_THROWS_AS(parse_hierarchy(minimal_doc(R"({"id": "a"})")), SemanticError);
  CHECK_THROWS_AS(parse_hierarchy(minimal_doc(R"({"id": "a", "orientation": "positive", "bounds": [3, 1]})")),
                  SemanticError);
  CHECK_THROWS_AS(parse_hierarchy(R"({"version": "1", "sub_elements": []})"), SemanticError);
}

TEST_CASE("syntax errors carry line and column") {
  const std::string doc = "{\n  \"name\": \"x\",\n  \"version\": 1,,\n}";
  try {
    parse_hierarchy(doc);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 16);
  }
  CHECK_THROWS_AS(parse_hierarchy(""), SyntaxError);
  CHECK_THROWS_AS(parse_hierarchy("{\"name\": \"x\" // comment\n}"), SyntaxError);
}
