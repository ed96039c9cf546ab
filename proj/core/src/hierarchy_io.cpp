#include <json.hpp>

#include <string>

#include "ifr/error.hpp"
#include "ifr/taxonomy.hpp"

namespace ifr {
namespace {

using Json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const auto end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw SemanticError(where, where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SemanticError(where, where + ": missing field '" + key + "'");
  return *it;
}

std::string require_string(const Json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string()) throw SemanticError(where, where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::string optional_string(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) throw SemanticError(where, where + ": field '" + key + "' must be a string");
  return it->get<std::string>();
}

const Json& require_array(const Json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_array()) throw SemanticError(where, where + ": field '" + key + "' must be an array");
  return v;
}

IndicatorDef parse_indicator(const Json& j, const std::string& sub_id, std::size_t pos) {
  const std::string where = sub_id + ".indicators[" + std::to_string(pos) + "]";
  IndicatorDef ind;
  ind.id = require_string(j, "id", where);
  const std::string& subject = ind.id.empty() ? where : ind.id;
  ind.display_name = optional_string(j, "name", subject);
  ind.sub_element_id = sub_id;
  ind.units = optional_string(j, "units", subject);

  const auto orientation = require_string(j, "orientation", subject);
  if (orientation == "positive") {
    ind.orientation = Orientation::Positive;
  } else if (orientation == "negative") {
    ind.orientation = Orientation::Negative;
  } else {
    throw SemanticError(subject, "indicator " + subject + ": orientation must be \"positive\" or "
                                 "\"negative\", got \"" + orientation + "\"");
  }

  if (auto it = j.find("bounds"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
      throw SemanticError(subject, "indicator " + subject + ": bounds must be [lo, hi]");
    }
    ind.fixed_bounds = Bounds{(*it)[0].get<double>(), (*it)[1].get<double>()};
  }
  if (auto it = j.find("orientation_provisional"); it != j.end()) {
    if (!it->is_boolean()) {
      throw SemanticError(subject, "indicator " + subject + ": orientation_provisional must be boolean");
    }
    ind.orientation_provisional = it->get<bool>();
  }
  return ind;
}

}  // namespace

HierarchySpec parse_hierarchy(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const auto byte = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(text, byte);
    std::string what = e.what();
    if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    throw SyntaxError(line, column, what);
  }

  HierarchySpec spec;
  spec.name = require_string(doc, "name", "document");
  spec.version = require_string(doc, "version", "document");

  const auto& subs = require_array(doc, "sub_elements", "document");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& js = subs[i];
    const std::string where = "sub_elements[" + std::to_string(i) + "]";
    SubElementDef sub;
    sub.id = require_string(js, "id", where);
    const std::string& subject = sub.id.empty() ? where : sub.id;
    const auto code = require_string(js, "element", subject);
    const auto element = ElementId::from_code(code);
    if (!element) {
      throw SemanticError(code, "sub-element " + subject + ": unknown element code \"" + code + "\"");
    }
    sub.element = *element;
    sub.display_name = optional_string(js, "name", subject);
    const auto& inds = require_array(js, "indicators", subject);
    for (std::size_t k = 0; k < inds.size(); ++k) {
      auto ind = parse_indicator(inds[k], sub.id, k);
      sub.indicator_ids.push_back(ind.id);
      spec.indicators.push_back(std::move(ind));
    }
    spec.sub_elements.push_back(std::move(sub));
  }

  const auto diags = validate_hierarchy(spec);
  if (!diags.empty()) {
    std::string what = diags.front().message;
    for (std::size_t i = 1; i < diags.size(); ++i) what += "; " + diags[i].message;
    throw SemanticError(diags.front().subject, what);
  }
  return spec;
}

std::string serialize_hierarchy(const HierarchySpec& spec) {
  Json doc;
  doc["name"] = spec.name;
  doc["version"] = spec.version;
  Json subs = Json::array();
  for (const auto& sub : spec.sub_elements) {
    Json js;
    js["id"] = sub.id;
    js["element"] = std::string(sub.element.code());
    js["name"] = sub.display_name;
    Json inds = Json::array();
    for (const auto& ind_id : sub.indicator_ids) {
      const auto* ind = spec.find_indicator(ind_id);
      if (!ind) continue;
      Json ji;
      ji["id"] = ind->id;
      ji["name"] = ind->display_name;
      ji["orientation"] = std::string(to_string(ind->orientation));
      ji["units"] = ind->units;
      if (ind->fixed_bounds) ji["bounds"] = {ind->fixed_bounds->lower, ind->fixed_bounds->upper};
      if (ind->orientation_provisional) ji["orientation_provisional"] = true;
      inds.push_back(std::move(ji));
    }
    js["indicators"] = std::move(inds);
    subs.push_back(std::move(js));
  }
  doc["sub_elements"] = std::move(subs);
  return doc.dump(2) + "\n";
}

}  // namespace ifr
