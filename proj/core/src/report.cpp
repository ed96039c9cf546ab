#include "ifr/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

#include "ifr/csv.hpp"

#ifndef IFR_VERSION_STRING
#define IFR_VERSION_STRING "0.0.0"
#endif

namespace ifr {

using Json = nlohmann::json;

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "?";
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string_view tool_version() { return IFR_VERSION_STRING; }

RunManifest make_manifest(std::string command, const HierarchySpec& spec,
                          const BoundsPolicy& bounds, const MissingDataPolicy& missing) {
  RunManifest m;
  m.tool_version = std::string(tool_version());
  m.hierarchy_name = spec.name;
  m.hierarchy_version = spec.version;
  m.command = std::move(command);
  m.bounds = bounds;
  m.missing = missing;
  return m;
}

namespace {

Json score_json(const MaybeScore& s) { return s ? Json(*s) : Json(nullptr); }

std::string csv_score(const MaybeScore& s) { return s ? csv::format_double(*s) : std::string(); }

Json bounds_json(const BoundsPolicy& b) {
  Json j;
  j["mode"] = std::string(to_string(b.mode));
  j["degenerate_score"] = b.degenerate_score;
  if (b.winsorize) {
    j["winsorize"] = {b.winsorize->lower_percentile, b.winsorize->upper_percentile};
  } else {
    j["winsorize"] = nullptr;
  }
  return j;
}

Json sensitivity_json(const SensitivityConfig& c) {
  Json j;
  j["trials"] = c.trials;
  j["sigma"] = c.sigma;
  j["seed"] = c.seed;
  Json levels = Json::array();
  for (auto l : c.levels) levels.push_back(std::string(to_string(l)));
  j["levels"] = levels;
  j["year"] = c.year ? Json(*c.year) : Json(nullptr);
  return j;
}

Json manifest_object(const RunManifest& m, bool include_volatile) {
  Json j;
  j["tool_version"] = m.tool_version;
  j["hierarchy"] = {{"name", m.hierarchy_name}, {"version", m.hierarchy_version}};
  j["command"] = m.command;
  j["bounds_policy"] = bounds_json(m.bounds);
  j["missing_policy"] = {{"coverage_threshold", m.missing.coverage_threshold},
                         {"element_required_for_nfri", m.missing.element_required_for_nfri}};
  j["sensitivity"] = m.sensitivity ? sensitivity_json(*m.sensitivity) : Json(nullptr);
  if (include_volatile) {
    j["input_digests"] = m.input_digests;
    j["timestamp"] = m.timestamp;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string pad(std::string_view s, std::size_t width, bool right = false) {
  std::string out(s);
  if (out.size() >= width) return out;
  const std::string fill(width - out.size(), ' ');
  return right ? fill + out : out + fill;
}

std::string table_header(const RunManifest& m) {
  std::ostringstream out;
  out << "# " << m.hierarchy_name << " (" << m.hierarchy_version << "), bounds "
      << to_string(m.bounds.mode) << ", theta " << csv::format_double(m.missing.coverage_threshold)
      << "\n";
  return out.str();
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", fraction * 100.0);
  return buf;
}

constexpr std::array<std::pair<ScoreKind, const char*>, 12> kSummaryColumns = {{
    {ScoreKind::Nfri, "NFRI"}, {ScoreKind::Nri, "NRI"}, {ScoreKind::Nai, "NAI"},
    {ScoreKind::Government, "Gov"}, {ScoreKind::Business, "Bus"}, {ScoreKind::Citizens, "Cit"},
    {ScoreKind::GR, "GR"}, {ScoreKind::GA, "GA"}, {ScoreKind::BR, "BR"},
    {ScoreKind::BA, "BA"}, {ScoreKind::CR, "CR"}, {ScoreKind::CA, "CA"},
}};

Json card_json(const ScoreCard& c) {
  Json j;
  j["country"] = c.country;
  j["year"] = c.year;
  j["nfri"] = score_json(c.nfri);
  j["nfri_paths"] = {{"thematic", score_json(c.nfri_via_thematic)},
                     {"actor", score_json(c.nfri_via_actors)},
                     {"gap", c.path_gap ? Json(*c.path_gap) : Json(nullptr)}};
  j["nri"] = score_json(c.nri);
  j["nai"] = score_json(c.nai);
  Json actors;
  for (auto a : kActors) actors[std::string(to_string(a))] = score_json(c.actors[a]);
  j["actor_readiness"] = actors;
  Json elements;
  for (auto e : kElements) elements[std::string(e.code())] = score_json(c.elements[e]);
  j["elements"] = elements;
  Json subs = Json::object();
  for (const auto& [id, s] : c.sub_element_scores) subs[id] = score_json(s);
  j["sub_elements"] = subs;
  Json inds = Json::object();
  for (const auto& [id, s] : c.indicator_scores) inds[id] = s;
  j["indicators"] = inds;
  j["degenerate_indicators"] = c.degenerate_indicators;
  j["coverage"] = {{"indicators", c.coverage.indicators},
                   {"sub_elements", c.coverage.sub_elements},
                   {"elements", c.coverage.elements}};
  return j;
}

}  // namespace

std::string manifest_json(const RunManifest& manifest, bool include_volatile) {
  return dump(manifest_object(manifest, include_volatile));
}

std::string format_score(const MaybeScore& score) {
  if (!score) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *score);
  return buf;
}

std::string write_scorecards(std::span<const ScoreCard> cards, const HierarchySpec& spec,
                             OutputFormat format, const RunManifest& manifest) {
  if (format == OutputFormat::Json) {
    Json j;
    j["manifest"] = manifest_object(manifest, false);
    Json list = Json::array();
    for (const auto& c : cards) list.push_back(card_json(c));
    j["scorecards"] = list;
    return dump(j);
  }

  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    std::vector<std::string> header = {"country", "year"};
    for (const auto& [kind, label] : kSummaryColumns) header.emplace_back(to_string(kind));
    for (const char* h : {"nfri_thematic", "nfri_actor", "path_gap", "coverage_indicators",
                          "coverage_sub_elements", "coverage_elements"}) {
      header.emplace_back(h);
    }
    for (const auto& sub : spec.sub_elements) header.push_back("sub:" + sub.id);
    for (const auto& ind : spec.indicators) header.push_back("ind:" + ind.id);
    out << csv::join_record(header) << "\n";

    for (const auto& c : cards) {
      std::vector<std::string> row = {c.country, std::to_string(c.year)};
      for (const auto& [kind, label] : kSummaryColumns) row.push_back(csv_score(c.score(kind)));
      row.push_back(csv_score(c.nfri_via_thematic));
      row.push_back(csv_score(c.nfri_via_actors));
      row.push_back(csv_score(c.path_gap));
      row.push_back(csv::format_double(c.coverage.indicators));
      row.push_back(csv::format_double(c.coverage.sub_elements));
      row.push_back(csv::format_double(c.coverage.elements));
      for (const auto& sub : spec.sub_elements) {
        const auto it = c.sub_element_scores.find(sub.id);
        row.push_back(it == c.sub_element_scores.end() ? std::string() : csv_score(it->second));
      }
      for (const auto& ind : spec.indicators) {
        const auto it = c.indicator_scores.find(ind.id);
        row.push_back(it == c.indicator_scores.end() ? std::string() : csv::format_double(it->second));
      }
      out << csv::join_record(row) << "\n";
    }
    return out.str();
  }

  out << table_header(manifest);
  out << pad("country", 8) << pad("year", 6);
  for (const auto& [kind, label] : kSummaryColumns) out << pad(label, 7, true);
  out << pad("coverage", 10, true) << "\n";
  for (const auto& c : cards) {
    out << pad(c.country, 8) << pad(std::to_string(c.year), 6);
    for (const auto& [kind, label] : kSummaryColumns) out << pad(format_score(c.score(kind)), 7, true);
    out << pad(percent(c.coverage.indicators), 10, true) << "\n";
  }
  return out.str();
}

std::string write_rank_table(const RankTable& table, OutputFormat format,
                             const RunManifest& manifest) {
  const std::string kind(to_string(table.kind));
  if (format == OutputFormat::Json) {
    Json j;
    j["manifest"] = manifest_object(manifest, false);
    j["score_kind"] = kind;
    Json rows = Json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"rank", r.rank}, {"country", r.country}, {"year", r.year}, {"score", r.score}});
    }
    j["ranked"] = rows;
    Json unranked = Json::array();
    for (const auto& [country, year] : table.unranked) {
      unranked.push_back({{"country", country}, {"year", year}});
    }
    j["unranked"] = unranked;
    return dump(j);
  }

  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "rank,country,year," << kind << "\n";
    for (const auto& r : table.rows) {
      out << csv::join_record({std::to_string(r.rank), r.country, std::to_string(r.year),
                               csv::format_double(r.score)})
          << "\n";
    }
    // Unranked appendix: empty rank and score.
    for (const auto& [country, year] : table.unranked) {
      out << csv::join_record({"", country, std::to_string(year), ""}) << "\n";
    }
    return out.str();
  }

  out << table_header(manifest);
  out << pad("rank", 6) << pad("country", 9) << pad("year", 6) << pad(kind, 8, true) << "\n";
  for (const auto& r : table.rows) {
    out << pad(std::to_string(r.rank), 6) << pad(r.country, 9) << pad(std::to_string(r.year), 6)
        << pad(format_score(r.score), 8, true) << "\n";
  }
  if (!table.unranked.empty()) {
    out << "\nunranked (" << kind << " missing):\n";
    for (const auto& [country, year] : table.unranked) {
      out << "  " << country << " " << year << "\n";
    }
  }
  return out.str();
}

std::string write_robustness(const RobustnessReport& report, const SwitchMatrix* switch_matrix,
                             OutputFormat format, const RunManifest& manifest) {
  if (format == OutputFormat::Json) {
    Json j;
    j["manifest"] = manifest_object(manifest, false);
    j["config"] = sensitivity_json(report.config);
    j["year"] = report.year;
    j["mean_spearman"] = report.mean_spearman;
    j["min_spearman"] = report.min_spearman;
    Json rows = Json::array();
    for (const auto& c : report.countries) {
      rows.push_back({{"country", c.country},
                      {"baseline_rank", c.baseline_rank},
                      {"min_rank", c.min_rank},
                      {"max_rank", c.max_rank},
                      {"mean_abs_rank_shift", c.mean_abs_shift}});
    }
    j["countries"] = rows;
    j["unranked"] = report.unranked;
    if (switch_matrix) {
      Json policies = Json::array();
      for (const auto& p : switch_matrix->policies) policies.push_back(bounds_json(p));
      j["normalization_switch"] = {{"policies", policies},
                                   {"countries", switch_matrix->countries},
                                   {"spearman", switch_matrix->rho}};
    }
    return dump(j);
  }

  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "country,baseline_rank,min_rank,max_rank,mean_abs_rank_shift,mean_spearman,"
           "min_spearman,seed\n";
    for (const auto& c : report.countries) {
      out << csv::join_record({c.country, std::to_string(c.baseline_rank),
                               std::to_string(c.min_rank), std::to_string(c.max_rank),
                               csv::format_double(c.mean_abs_shift),
                               csv::format_double(report.mean_spearman),
                               csv::format_double(report.min_spearman),
                               std::to_string(report.config.seed)})
          << "\n";
    }
    return out.str();
  }

  char buf[160];
  out << table_header(manifest);
  std::snprintf(buf, sizeof buf, "year %d, %zu trials, sigma %s, seed %llu\n", report.year,
                report.config.trials, csv::format_double(report.config.sigma).c_str(),
                static_cast<unsigned long long>(report.config.seed));
  out << buf;
  std::snprintf(buf, sizeof buf, "mean Spearman rho %.4f, min %.4f\n\n", report.mean_spearman,
                report.min_spearman);
  out << buf;
  out << pad("country", 9) << pad("baseline", 9, true) << pad("min", 6, true)
      << pad("max", 6, true) << pad("mean |shift|", 14, true) << "\n";
  for (const auto& c : report.countries) {
    std::snprintf(buf, sizeof buf, "%.3f", c.mean_abs_shift);
    out << pad(c.country, 9) << pad(std::to_string(c.baseline_rank), 9, true)
        << pad(std::to_string(c.min_rank), 6, true) << pad(std::to_string(c.max_rank), 6, true)
        << pad(buf, 14, true) << "\n";
  }
  if (!report.unranked.empty()) {
    out << "\nunranked (NFRI missing):";
    for (const auto& c : report.unranked) out << " " << c;
    out << "\n";
  }
  if (switch_matrix) {
    out << "\nnormalization switch (Spearman rho, " << switch_matrix->countries.size()
        << " countries)\n" << pad("", 11);
    for (const auto& p : switch_matrix->policies) out << pad(to_string(p.mode), 11, true);
    out << "\n";
    for (std::size_t i = 0; i < switch_matrix->policies.size(); ++i) {
      out << pad(to_string(switch_matrix->policies[i].mode), 11);
      for (double rho : switch_matrix->rho[i]) {
        std::snprintf(buf, sizeof buf, "%.4f", rho);
        out << pad(buf, 11, true);
      }
      out << "\n";
    }
  }
  return out.str();
}

namespace {

struct SeriesRow {
  std::string level;
  std::string node;
  std::string parent;
  std::string label;
  MaybeScore score;
  std::string flags;
};

std::vector<SeriesRow> profile_rows(const ScoreCard& card, const HierarchySpec& spec) {
  std::vector<SeriesRow> rows;
  rows.push_back({"index", "NFRI", "", "National Future Readiness Index", card.nfri, ""});
  rows.push_back({"sub_index", "NRI", "NFRI", "National Resilience Index", card.nri, ""});
  rows.push_back({"sub_index", "NAI", "NFRI", "National Adaptive Capacity Index", card.nai, ""});
  for (auto a : kActors) {
    rows.push_back({"actor", std::string(to_string(a)), "NFRI",
                    std::string(to_string(a)) + " Future Readiness", card.actors[a], ""});
  }
  for (auto e : kElements) {
    rows.push_back({"element", std::string(e.code()), "NFRI",
                    std::string(e.name()),
                    card.elements[e], ""});
  }
  for (const auto& sub : spec.sub_elements) {
    const auto it = card.sub_element_scores.find(sub.id);
    rows.push_back({"sub_element", sub.id, std::string(sub.element.code()), sub.display_name,
                    it == card.sub_element_scores.end() ? MaybeScore{} : it->second, ""});
  }
  for (const auto& sub : spec.sub_elements) {
    for (const auto& id : sub.indicator_ids) {
      const auto* ind = spec.find_indicator(id);
      const auto it = card.indicator_scores.find(id);
      std::string flags;
      if (card.degenerate_indicators.contains(id)) flags = "degenerate";
      if (ind && ind->orientation_provisional) flags += flags.empty() ? "provisional" : ";provisional";
      rows.push_back({"indicator", id, sub.id, ind ? ind->display_name : id,
                      it == card.indicator_scores.end() ? MaybeScore{} : MaybeScore(it->second), flags});
    }
  }
  for (auto& r : rows) {
    if (!r.score) r.flags = r.flags.empty() ? "missing" : "missing;" + r.flags;
  }
  return rows;
}

}  // namespace

std::string write_plot_series(const ScoreCard& card, const HierarchySpec& spec) {
  std::ostringstream out;
  out << "country,year,level,node,parent,label,score,flags\n";
  for (const auto& r : profile_rows(card, spec)) {
    out << csv::join_record({card.country, std::to_string(card.year), r.level, r.node, r.parent,
                             r.label, csv_score(r.score), r.flags})
        << "\n";
  }
  return out.str();
}

std::string write_profile(const ScoreCard& card, const HierarchySpec& spec, OutputFormat format,
                          const RunManifest& manifest) {
  if (format == OutputFormat::Csv) return write_plot_series(card, spec);
  if (format == OutputFormat::Json) {
    Json j;
    j["manifest"] = manifest_object(manifest, false);
    j["scorecard"] = card_json(card);
    Json elements = Json::array();
    for (auto e : kElements) {
      Json je;
      je["code"] = std::string(e.code());
      je["score"] = score_json(card.elements[e]);
      Json subs = Json::array();
      for (const auto* sub : spec.sub_elements_of(e)) {
        Json js;
        js["id"] = sub->id;
        js["name"] = sub->display_name;
        const auto it = card.sub_element_scores.find(sub->id);
        js["score"] = it == card.sub_element_scores.end() ? Json(nullptr) : score_json(it->second);
        Json inds = Json::array();
        for (const auto& id : sub->indicator_ids) {
          const auto sit = card.indicator_scores.find(id);
          inds.push_back({{"id", id},
                          {"score", sit == card.indicator_scores.end() ? Json(nullptr) : Json(sit->second)},
                          {"degenerate", card.degenerate_indicators.contains(id)}});
        }
        js["indicators"] = inds;
        subs.push_back(js);
      }
      je["sub_elements"] = subs;
      elements.push_back(je);
    }
    j["tree"] = elements;
    return dump(j);
  }

  std::ostringstream out;
  out << table_header(manifest);
  out << card.country << " " << card.year << "  NFRI " << format_score(card.nfri)
      << "  (coverage: indicators " << percent(card.coverage.indicators) << ", sub-elements "
      << percent(card.coverage.sub_elements) << ", elements " << percent(card.coverage.elements)
      << ")\n";
  out << "  by theme:  NRI " << format_score(card.nri) << "   NAI " << format_score(card.nai) << "\n";
  out << "  by actor: ";
  for (auto a : kActors) out << " " << to_string(a) << " " << format_score(card.actors[a]);
  out << "\n\n";
  for (auto e : kElements) {
    out << e.code() << "  " << format_score(card.elements[e]) << "\n";
    for (const auto* sub : spec.sub_elements_of(e)) {
      const auto it = card.sub_element_scores.find(sub->id);
      const MaybeScore s = it == card.sub_element_scores.end() ? MaybeScore{} : it->second;
      out << "  " << pad(sub->id, 5) << pad(format_score(s), 6, true) << "  " << sub->display_name << "\n";
      for (const auto& id : sub->indicator_ids) {
        const auto sit = card.indicator_scores.find(id);
        const MaybeScore is = sit == card.indicator_scores.end() ? MaybeScore{} : MaybeScore(sit->second);
        out << "      " << pad(format_score(is), 6, true) << "  " << id;
        if (card.degenerate_indicators.contains(id)) out << "  [degenerate]";
        out << "\n";
      }
    }
  }
  return out.str();
}

std::string write_validation(const ValidationSummary& summary, const HierarchySpec& spec,
                             OutputFormat format, const RunManifest& manifest) {
  if (format == OutputFormat::Json) {
    Json j;
    j["manifest"] = manifest_object(manifest, false);
    Json errors = Json::array();
    for (const auto& d : summary.errors) errors.push_back({{"subject", d.subject}, {"message", d.message}});
    j["errors"] = errors;
    j["warnings"] = summary.warnings;
    if (summary.coverage) {
      Json cov;
      cov["global"] = summary.coverage->global;
      Json cells = Json::array();
      for (const auto& [cell, f] : summary.coverage->by_country_year) {
        cells.push_back({{"country", cell.first}, {"year", cell.second}, {"coverage", f}});
      }
      cov["by_country_year"] = cells;
      cov["by_indicator"] = summary.coverage->by_indicator;
      j["coverage"] = cov;
    } else {
      j["coverage"] = nullptr;
    }
    return dump(j);
  }

  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "kind,subject,message\n";
    for (const auto& d : summary.errors) out << csv::join_record({"error", d.subject, d.message}) << "\n";
    for (const auto& w : summary.warnings) out << csv::join_record({"warning", "", w}) << "\n";
    if (summary.coverage) {
      out << csv::join_record({"coverage", "global", csv::format_double(summary.coverage->global)}) << "\n";
      for (const auto& [cell, f] : summary.coverage->by_country_year) {
        out << csv::join_record({"coverage", cell.first + ":" + std::to_string(cell.second),
                                 csv::format_double(f)})
            << "\n";
      }
    }
    return out.str();
  }

  out << "hierarchy: " << spec.name << " (version " << spec.version << "), "
      << spec.sub_elements.size() << " sub-elements, " << spec.indicators.size() << " indicators\n";
  (void)manifest;
  for (const auto& d : summary.errors) out << "error: " << d.message << "\n";
  for (const auto& w : summary.warnings) out << "warning: " << w << "\n";
  if (summary.coverage) {
    out << "coverage: global " << percent(summary.coverage->global) << ", "
        << summary.coverage->by_country_year.size() << " country-years\n";
    for (const auto& [cell, f] : summary.coverage->by_country_year) {
      out << "  " << pad(cell.first, 8) << pad(std::to_string(cell.second), 6) << pad(percent(f), 8, true) << "\n";
    }
  }
  out << (summary.errors.empty() ? "OK\n" : "FAILED\n");
  return out.str();
}

}  // namespace ifr
