#include "ifr/taxonomy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace ifr {

std::string_view to_string(Actor actor) {
  switch (actor) {
    case Actor::Government: return "Government";
    case Actor::Business: return "Business";
    case Actor::Citizens: return "Citizens";
  }
  return "?";
}

std::string_view to_string(Theme theme) {
  switch (theme) {
    case Theme::Resilience: return "Resilience";
    case Theme::AdaptiveCapacity: return "AdaptiveCapacity";
  }
  return "?";
}

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::Positive ? "positive" : "negative";
}

namespace {
constexpr std::array<std::string_view, kElementCount> kCodes = {"GR", "GA", "BR",
                                                                "BA", "CR", "CA"};
}

std::string_view ElementId::code() const { return kCodes[index()]; }

std::string_view ElementId::name() const {
  static constexpr std::array<std::string_view, kElementCount> kNames = {
      "Government Resilience", "Government Adaptability", "Business Resilience",
      "Business Adaptability", "Citizen Resilience",      "Citizen Adaptability"};
  return kNames[index()];
}

std::optional<ElementId> ElementId::from_code(std::string_view code) {
  for (std::size_t i = 0; i < kCodes.size(); ++i) {
    if (kCodes[i] == code) return from_index(i);
  }
  return std::nullopt;
}

const IndicatorDef* HierarchySpec::find_indicator(std::string_view id) const {
  auto it = std::find_if(indicators.begin(), indicators.end(),
                         [&](const IndicatorDef& d) { return d.id == id; });
  return it == indicators.end() ? nullptr : &*it;
}

const SubElementDef* HierarchySpec::find_sub_element(std::string_view id) const {
  auto it = std::find_if(sub_elements.begin(), sub_elements.end(),
                         [&](const SubElementDef& s) { return s.id == id; });
  return it == sub_elements.end() ? nullptr : &*it;
}

std::vector<const SubElementDef*> HierarchySpec::sub_elements_of(ElementId element) const {
  std::vector<const SubElementDef*> out;
  for (const auto& s : sub_elements) {
    if (s.element == element) out.push_back(&s);
  }
  return out;
}

std::vector<Diagnostic> validate_hierarchy(const HierarchySpec& spec) {
  std::vector<Diagnostic> diags;
  auto report = [&](std::string subject, std::string message) {
    diags.push_back({std::move(subject), std::move(message)});
  };

  std::map<std::string, int> indicator_defs;
  for (const auto& ind : spec.indicators) {
    if (ind.id.empty()) {
      report("", "indicator with empty id");
      continue;
    }
    if (++indicator_defs[ind.id] == 2) report(ind.id, "duplicate indicator id " + ind.id);
    if (ind.fixed_bounds) {
      const auto& b = *ind.fixed_bounds;
      if (!std::isfinite(b.lower) || !std::isfinite(b.upper) || !(b.lower < b.upper)) {
        report(ind.id, "indicator " + ind.id + " has bounds with lower >= upper");
      }
    }
  }

  std::map<std::string, int> sub_defs;
  // indicator id -> sub-elements listing it
  std::map<std::string, std::vector<std::string>> listed_in;
  for (const auto& sub : spec.sub_elements) {
    if (sub.id.empty()) {
      report("", "sub-element with empty id");
      continue;
    }
    if (++sub_defs[sub.id] == 2) report(sub.id, "duplicate sub-element id " + sub.id);
    if (sub.indicator_ids.empty()) {
      report(sub.id, "sub-element " + sub.id + " has no indicators");
    }
    std::set<std::string> seen;
    for (const auto& ind_id : sub.indicator_ids) {
      if (!seen.insert(ind_id).second) {
        report(sub.id, "sub-element " + sub.id + " lists indicator " + ind_id + " twice");
        continue;
      }
      listed_in[ind_id].push_back(sub.id);
      if (!indicator_defs.contains(ind_id)) {
        report(ind_id, "sub-element " + sub.id + " references unknown indicator " + ind_id);
      }
    }
  }

  for (std::size_t i = 0; i < kElementCount; ++i) {
    const auto element = ElementId::from_index(i);
    const bool present = std::any_of(spec.sub_elements.begin(), spec.sub_elements.end(),
                                     [&](const SubElementDef& s) { return s.element == element; });
    if (!present) report(std::string(element.code()), "missing element " + std::string(element.code()));
  }

  for (const auto& ind : spec.indicators) {
    if (ind.id.empty()) continue;
    if (!sub_defs.contains(ind.sub_element_id)) {
      report(ind.id, "indicator " + ind.id + " references unknown sub-element " +
                         (ind.sub_element_id.empty() ? "(none)" : ind.sub_element_id));
      continue;
    }
    const auto it = listed_in.find(ind.id);
    if (it == listed_in.end()) {
      report(ind.id, "indicator " + ind.id + " is not listed by sub-element " + ind.sub_element_id);
      continue;
    }
    if (it->second.size() > 1) {
      report(ind.id, "indicator " + ind.id + " is shared by several sub-elements");
    } else if (it->second.front() != ind.sub_element_id) {
      report(ind.id, "indicator " + ind.id + " belongs to " + ind.sub_element_id +
                         " but is listed by " + it->second.front());
    }
  }

  std::sort(diags.begin(), diags.end());
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
  return diags;
}

}  // namespace ifr
