// Synthetic panels and small hand-built hierarchies for tests.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ifr/ingest.hpp"
#include "ifr/taxonomy.hpp"

namespace fixtures {

inline std::string country_code(std::size_t i) {
  std::string code = "C";
  if (i < 100) code += '0';
  if (i < 10) code += '0';
  return code + std::to_string(i);
}

struct PanelShape {
  std::size_t countries = 10;
  std::vector<int> years = {2024};
  double missing_rate = 0.0;  // chance a cell is written as NA
  bool drop_missing_rows = false;
  /// Offsets up to +-500 and spreads from 1e-3 to 1e3 per indicator. When
  /// false every indicator is uniform on [0, 100].
  bool varied_scales = true;
};

/// Random raw values with a per-indicator offset and scale, so indicators sit
/// on very different raw ranges.
inline ifr::Dataset random_panel(const ifr::HierarchySpec& spec, const PanelShape& shape,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ifr::Observation> rows;
  for (const auto& ind : spec.indicators) {
    double offset = (unit(rng) - 0.5) * 1000.0;
    double scale = std::pow(10.0, unit(rng) * 6.0 - 3.0);
    if (!shape.varied_scales) offset = 0.0, scale = 100.0;
    for (int year : shape.years) {
      for (std::size_t c = 0; c < shape.countries; ++c) {
        ifr::Observation o{country_code(c), year, ind.id, offset + scale * unit(rng)};
        if (shape.missing_rate > 0 && unit(rng) < shape.missing_rate) {
          if (shape.drop_missing_rows) continue;
          o.value.reset();
        }
        rows.push_back(std::move(o));
      }
    }
  }
  return ifr::Dataset(std::move(rows));
}

inline std::string to_csv(std::span<const ifr::Observation> rows) {
  std::ostringstream out;
  out << "country,year,indicator,value\n";
  out.precision(17);
  for (const auto& o : rows) {
    out << o.country << "," << o.year << "," << o.indicator_id << ",";
    if (o.value) out << *o.value;
    out << "\n";
  }
  return out.str();
}

/// One sub-element per element, two indicators each (both positive).
inline ifr::HierarchySpec tiny_hierarchy() {
  ifr::HierarchySpec spec;
  spec.name = "tiny";
  spec.version = "1";
  for (auto element : ifr::kElements) {
    const std::string code(element.code());
    ifr::SubElementDef sub{code + "1", element, code + " one", {}};
    for (int k = 0; k < 2; ++k) {
      const std::string id = code + "_i" + std::to_string(k);
      sub.indicator_ids.push_back(id);
      spec.indicators.push_back({id, id, sub.id, ifr::Orientation::Positive, "u", std::nullopt, false});
    }
    spec.sub_elements.push_back(std::move(sub));
  }
  return spec;
}

/// Every indicator of `spec` gets fixed goalposts [lo, hi].
inline ifr::HierarchySpec with_goalposts(ifr::HierarchySpec spec, double lo, double hi) {
  for (auto& ind : spec.indicators) ind.fixed_bounds = ifr::Bounds{lo, hi};
  return spec;
}

/// Tiny hierarchy on goalposts [0, 99], so a raw value x scores exactly
/// 1 + x. Country "WEX" gets element scores GR..CA = 10, 20, ..., 60.
struct WorkedExample {
  ifr::HierarchySpec spec;
  ifr::Dataset data;
};

inline WorkedExample worked_example() {
  auto spec = with_goalposts(tiny_hierarchy(), 0.0, 99.0);
  std::vector<ifr::Observation> rows;
  for (const auto& sub : spec.sub_elements) {
    const double raw = 10.0 * (sub.element.index() + 1) - 1.0;
    for (const auto& id : sub.indicator_ids) rows.push_back({"WEX", 2024, id, raw});
  }
  return {spec, ifr::Dataset(std::move(rows))};
}

}  // namespace fixtures
