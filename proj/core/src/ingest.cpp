#include "ifr/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ifr/csv.hpp"
#include "ifr/error.hpp"

namespace ifr {

Dataset::Dataset(std::vector<Observation> observations) : observations_(std::move(observations)) {
  std::sort(observations_.begin(), observations_.end(),
            [](const Observation& a, const Observation& b) { return a.key() < b.key(); });
  for (std::size_t i = 0; i < observations_.size(); ++i) {
    const auto& o = observations_[i];
    if (i > 0 && observations_[i - 1].key() == o.key()) {
      throw DuplicateKeyError("duplicate observation for (" + o.country + ", " +
                              std::to_string(o.year) + ", " + o.indicator_id + ")");
    }
    if (o.value && !std::isfinite(*o.value)) {
      throw DomainError("non-finite value for (" + o.country + ", " + std::to_string(o.year) +
                        ", " + o.indicator_id + ")");
    }
    countries_.insert(o.country);
    years_.insert(o.year);
  }
}

std::vector<CountryYear> Dataset::cells() const {
  std::vector<CountryYear> out;
  for (const auto& o : observations_) {
    if (out.empty() || out.back().first != o.country || out.back().second != o.year) {
      out.emplace_back(o.country, o.year);
    }
  }
  return out;
}

const Observation* Dataset::find(std::string_view country, int year,
                                 std::string_view indicator) const {
  auto it = std::lower_bound(
      observations_.begin(), observations_.end(), std::tie(country, year, indicator),
      [](const Observation& o, const auto& key) {
        return std::tie(o.country, o.year, o.indicator_id) < key;
      });
  if (it == observations_.end() || it->country != country || it->year != year ||
      it->indicator_id != indicator) {
    return nullptr;
  }
  return &*it;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_value(std::string_view text, std::size_t row) {
  text = trim(text);
  if (text.empty() || text == "NA") return std::nullopt;
  std::string_view digits = text;
  if (digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) {
    // from_chars flags both overflow and underflow; only overflow is an error.
    const std::string copy(digits);
    const double approx = std::strtod(copy.c_str(), nullptr);
    if (std::isinf(approx)) {
      throw FormatError(row, "value \"" + std::string(text) + "\" exceeds double range");
    }
    return approx;
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw FormatError(row, "non-numeric value \"" + std::string(text) + "\"");
  }
  if (!std::isfinite(value)) {
    throw FormatError(row, "non-finite value \"" + std::string(text) + "\"");
  }
  return value;
}

int parse_year(std::string_view text, std::size_t row) {
  text = trim(text);
  int year = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError(row, "invalid year \"" + std::string(text) + "\"");
  }
  return year;
}

}  // namespace

Dataset load_observations(std::istream& source) {
  std::vector<Observation> rows;
  std::string line;
  std::size_t row = 0;
  bool header_seen = false;
  while (std::getline(source, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
      if (line != "country,year,indicator,value") {
        throw FormatError(row, "header must be exactly country,year,indicator,value");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    auto fields = csv::split_record(line);
    if (!fields) throw FormatError(row, "unterminated quoted field");
    if (fields->size() != 4) {
      throw FormatError(row, "expected 4 fields, found " + std::to_string(fields->size()));
    }
    Observation obs;
    obs.country = std::string(trim((*fields)[0]));
    if (obs.country.empty()) throw FormatError(row, "empty country code");
    obs.year = parse_year((*fields)[1], row);
    obs.indicator_id = std::string(trim((*fields)[2]));
    if (obs.indicator_id.empty()) throw FormatError(row, "empty indicator id");
    obs.value = parse_value((*fields)[3], row);
    rows.push_back(std::move(obs));
  }
  if (!header_seen) throw FormatError(1, "missing header row");
  return Dataset(std::move(rows));
}

Dataset load_observations_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open data file " + path);
  return load_observations(in);
}

CoverageReport validate_dataset(const Dataset& dataset, const HierarchySpec& spec) {
  std::set<std::string> unknown;
  for (const auto& o : dataset.observations()) {
    if (!spec.find_indicator(o.indicator_id)) unknown.insert(o.indicator_id);
  }
  if (!unknown.empty()) {
    throw UnknownIndicatorError(std::vector<std::string>(unknown.begin(), unknown.end()));
  }

  CoverageReport report;
  report.indicator_count = spec.indicators.size();
  const auto cells = dataset.cells();
  std::map<CountryYear, std::size_t> present_by_cell;
  std::map<std::string, std::set<std::string>> countries_by_indicator;
  std::size_t present_total = 0;
  for (const auto& o : dataset.observations()) {
    if (!o.value) continue;
    ++present_by_cell[{o.country, o.year}];
    countries_by_indicator[o.indicator_id].insert(o.country);
    ++present_total;
  }

  const double n_ind = static_cast<double>(report.indicator_count);
  for (const auto& cell : cells) {
    const auto it = present_by_cell.find(cell);
    const double present = it == present_by_cell.end() ? 0.0 : static_cast<double>(it->second);
    report.by_country_year[cell] = n_ind > 0 ? present / n_ind : 0.0;
  }
  const double n_countries = static_cast<double>(dataset.countries().size());
  for (const auto& ind : spec.indicators) {
    const auto it = countries_by_indicator.find(ind.id);
    const double covered = it == countries_by_indicator.end() ? 0.0 : static_cast<double>(it->second.size());
    report.by_indicator[ind.id] = n_countries > 0 ? covered / n_countries : 0.0;
  }
  const double denom = static_cast<double>(cells.size()) * n_ind;
  report.global = denom > 0 ? static_cast<double>(present_total) / denom : 0.0;
  return report;
}

}  // namespace ifr
