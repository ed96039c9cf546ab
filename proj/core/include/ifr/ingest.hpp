#pragma once

#include <compare>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ifr/taxonomy.hpp"

namespace ifr {

struct ObservationKey {
  std::string country;
  int year = 0;
  std::string indicator_id;

  friend auto operator<=>(const ObservationKey&, const ObservationKey&) = default;
  friend bool operator==(const ObservationKey&, const ObservationKey&) = default;
};

struct Observation {
  std::string country;
  int year = 0;
  std::string indicator_id;
  std::optional<double> value;  // nullopt == explicit missing (empty or NA)

  ObservationKey key() const { return {country, year, indicator_id}; }
  friend bool operator==(const Observation&, const Observation&) = default;
};

using CountryYear = std::pair<std::string, int>;

/// Immutable observation panel. Observations are held sorted by
/// (country, year, indicator), so row order in the source never matters.
class Dataset {
 public:
  Dataset() = default;

  /// Throws DuplicateKeyError on a repeated (country, year, indicator) and
  /// DomainError on a non-finite value.
  explicit Dataset(std::vector<Observation> observations);

  std::span<const Observation> observations() const { return observations_; }
  const std::set<std::string>& countries() const { return countries_; }
  const std::set<int>& years() const { return years_; }
  std::size_t size() const { return observations_.size(); }
  bool empty() const { return observations_.empty(); }

  /// Distinct (country, year) cells, sorted.
  std::vector<CountryYear> cells() const;

  /// The stored observation for a key, or nullptr when absent from the file.
  const Observation* find(std::string_view country, int year, std::string_view indicator) const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.observations_ == b.observations_;
  }

 private:
  std::vector<Observation> observations_;
  std::set<std::string> countries_;
  std::set<int> years_;
};

/// Reads `country,year,indicator,value` rows. Throws FormatError (with the
/// row number) on malformed input and DuplicateKeyError on repeated keys.
Dataset load_observations(std::istream& source);
Dataset load_observations_file(const std::string& path);

struct CoverageReport {
  std::size_t indicator_count = 0;
  /// Present indicators / hierarchy indicator count, per country-year.
  std::map<CountryYear, double> by_country_year;
  /// Share of countries with at least one present value, per indicator.
  std::map<std::string, double> by_indicator;
  /// Present observations / (country-years x indicators); 0 for an empty panel.
  double global = 0.0;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Throws UnknownIndicatorError listing every id missing from the spec.
CoverageReport validate_dataset(const Dataset& dataset, const HierarchySpec& spec);

}  // namespace ifr
