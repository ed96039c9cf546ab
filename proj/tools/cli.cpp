#include "cli.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iterator>
#include <sstream>

#include "ifr/aggregate.hpp"
#include "ifr/csv.hpp"
#include "ifr/error.hpp"
#include "ifr/ingest.hpp"
#include "ifr/normalize.hpp"
#include "ifr/report.hpp"
#include "ifr/sensitivity.hpp"
#include "ifr/taxonomy.hpp"

namespace ifr::cli {
namespace {

struct CommonOptions {
  std::string hierarchy_path;
  std::string data_path;
  std::string bounds = "in-sample";
  double theta = 0.5;
  bool partial_nfri = false;
  double degenerate_score = 50.5;
  std::vector<double> winsorize;
  std::string format = "table";
  std::string output_path;
  std::string manifest_path;
};

struct Options {
  CommonOptions common;
  std::string init_path;
  std::string score_kind = "nfri";
  std::optional<int> year;
  std::string country;
  bool plot_data = false;
  std::size_t trials = 1000;
  double sigma = 0.2;
  std::uint64_t seed = 42;
  std::vector<std::string> levels = {"indicator", "sub_element", "element"};
  std::vector<std::string> compare_bounds;
  unsigned threads = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

BoundsPolicy bounds_policy(const CommonOptions& o, std::string_view mode_text) {
  BoundsPolicy p;
  const auto mode = parse_bounds_mode(mode_text);
  if (!mode) throw UsageError("unknown bounds policy " + std::string(mode_text));
  p.mode = *mode;
  p.degenerate_score = o.degenerate_score;
  if (!o.winsorize.empty()) {
    if (o.winsorize.size() != 2) throw UsageError("--winsorize takes two percentiles LO,HI");
    p.winsorize = Winsorization{o.winsorize[0], o.winsorize[1]};
  }
  p.validate();
  return p;
}

MissingDataPolicy missing_policy(const CommonOptions& o) {
  MissingDataPolicy p;
  p.coverage_threshold = o.theta;
  p.element_required_for_nfri = !o.partial_nfri;
  p.validate();
  return p;
}

OutputFormat output_format(const CommonOptions& o) {
  const auto f = parse_output_format(o.format);
  if (!f) throw UsageError("unknown format " + o.format);
  return *f;
}

struct Inputs {
  HierarchySpec spec;
  Dataset data;
  std::map<std::string, std::string> digests;
};

HierarchySpec load_hierarchy(const CommonOptions& o, std::map<std::string, std::string>& digests) {
  if (o.hierarchy_path.empty()) return build_default_ifr_hierarchy();
  const auto text = read_file(o.hierarchy_path);
  digests[o.hierarchy_path] = sha256_hex(text);
  return parse_hierarchy(text);
}

Inputs load_inputs(const CommonOptions& o) {
  Inputs in;
  in.spec = load_hierarchy(o, in.digests);
  if (o.data_path.empty()) throw UsageError("--data is required");
  const auto text = read_file(o.data_path);
  in.digests[o.data_path] = sha256_hex(text);
  std::istringstream stream(text);
  in.data = load_observations(stream);
  validate_dataset(in.data, in.spec);
  return in;
}

void emit(const CommonOptions& o, const std::string& payload, std::ostream& out) {
  if (o.output_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(o.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + o.output_path);
  file << payload;
  if (!file) throw IoError("write failed for " + o.output_path);
}

void emit_manifest(const CommonOptions& o, RunManifest manifest) {
  if (o.manifest_path.empty()) return;
  manifest.timestamp = utc_timestamp();
  std::ofstream file(o.manifest_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write manifest " + o.manifest_path);
  file << manifest_json(manifest, true);
}

int latest_year(const Dataset& data) {
  if (data.years().empty()) throw LookupError("dataset has no observations");
  return *data.years().rbegin();
}

// ---- commands ---------------------------------------------------------------

int cmd_init_hierarchy(const Options& opt, std::ostream& out) {
  const auto text = serialize_hierarchy(build_default_ifr_hierarchy());
  std::ofstream file(opt.init_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + opt.init_path);
  file << text;
  file.close();
  if (!file) throw IoError("write failed for " + opt.init_path);
  out << "wrote default hierarchy to " << opt.init_path << "\n";
  return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const auto& o = opt.common;
  const auto format = output_format(o);
  ValidationSummary summary;
  std::map<std::string, std::string> digests;

  HierarchySpec spec;
  try {
    spec = load_hierarchy(o, digests);
  } catch (const SemanticError& e) {
    summary.errors.push_back({e.subject(), e.what()});
  } catch (const SyntaxError& e) {
    summary.errors.push_back({"", e.what()});
  }

  if (summary.errors.empty()) {
    std::vector<std::string> provisional;
    for (const auto& ind : spec.indicators) {
      if (ind.orientation_provisional) provisional.push_back(ind.id);
    }
    if (!provisional.empty()) {
      std::string w = "provisional orientation for";
      for (const auto& id : provisional) w += " " + id;
      summary.warnings.push_back(w);
    }
  }

  if (summary.errors.empty() && !o.data_path.empty()) {
    try {
      const auto text = read_file(o.data_path);
      digests[o.data_path] = sha256_hex(text);
      std::istringstream stream(text);
      const auto data = load_observations(stream);
      summary.coverage = validate_dataset(data, spec);
      if (data.empty() || summary.coverage->global == 0.0) {
        summary.warnings.push_back("coverage is 0: no present observations");
      } else {
        BoundsPolicy in_sample;
        in_sample.mode = BoundsMode::InSamplePerYear;
        std::set<std::pair<std::string, int>> degenerate;
        for (const auto& s : normalize_dataset(data, spec, in_sample)) {
          if (s.degenerate) degenerate.insert({s.indicator_id, s.year});
        }
        for (const auto& [id, year] : degenerate) {
          summary.warnings.push_back("degenerate in-sample bounds for " + id + " in " +
                                     std::to_string(year));
        }
      }
    } catch (const UnknownIndicatorError& e) {
      for (const auto& id : e.offenders()) {
        summary.errors.push_back({id, "unknown indicator " + id + " in data"});
      }
    } catch (const FormatError& e) {
      summary.errors.push_back({"", e.what()});
    } catch (const DuplicateKeyError& e) {
      summary.errors.push_back({"", e.what()});
    }
  }

  auto manifest = make_manifest("validate", spec, BoundsPolicy{}, MissingDataPolicy{});
  manifest.input_digests = digests;
  emit(o, write_validation(summary, spec, format, manifest), out);
  emit_manifest(o, manifest);
  return summary.errors.empty() ? kOk : kValidation;
}

int cmd_score(const Options& opt, std::ostream& out) {
  const auto& o = opt.common;
  const auto format = output_format(o);
  const auto bounds = bounds_policy(o, o.bounds);
  const auto missing = missing_policy(o);
  const auto in = load_inputs(o);
  auto cards = build_scorecards(in.data, in.spec, bounds, missing);
  if (opt.year) {
    std::erase_if(cards, [&](const ScoreCard& c) { return c.year != *opt.year; });
  }
  auto manifest = make_manifest("score", in.spec, bounds, missing);
  manifest.input_digests = in.digests;
  emit(o, write_scorecards(cards, in.spec, format, manifest), out);
  emit_manifest(o, manifest);
  return kOk;
}

int cmd_rank(const Options& opt, std::ostream& out) {
  const auto& o = opt.common;
  const auto format = output_format(o);
  const auto kind = parse_score_kind(opt.score_kind);
  if (!kind) throw UsageError("unknown score kind " + opt.score_kind);
  const auto bounds = bounds_policy(o, o.bounds);
  const auto missing = missing_policy(o);
  const auto in = load_inputs(o);
  auto cards = build_scorecards(in.data, in.spec, bounds, missing);
  if (!in.data.empty()) {
    const int year = opt.year.value_or(latest_year(in.data));
    std::erase_if(cards, [&](const ScoreCard& c) { return c.year != year; });
  }
  auto manifest = make_manifest("rank", in.spec, bounds, missing);
  manifest.input_digests = in.digests;
  emit(o, write_rank_table(rank(cards, *kind), format, manifest), out);
  emit_manifest(o, manifest);
  return kOk;
}

int cmd_sensitivity(const Options& opt, std::ostream& out) {
  const auto& o = opt.common;
  const auto format = output_format(o);
  const auto bounds = bounds_policy(o, o.bounds);
  const auto missing = missing_policy(o);

  SensitivityConfig config;
  config.trials = opt.trials;
  config.sigma = opt.sigma;
  config.seed = opt.seed;
  config.year = opt.year;
  config.threads = std::max(1u, opt.threads);
  config.levels.clear();
  for (const auto& l : opt.levels) {
    const auto level = parse_weight_level(l);
    if (!level) throw UsageError("unknown weight level " + l);
    config.levels.insert(*level);
  }
  config.validate();

  std::vector<BoundsPolicy> switch_policies;
  for (const auto& mode : opt.compare_bounds) switch_policies.push_back(bounds_policy(o, mode));
  if (switch_policies.size() == 1) throw UsageError("--compare-bounds needs at least two policies");

  const auto in = load_inputs(o);
  const auto report = run_sensitivity(in.data, in.spec, bounds, missing, config);
  std::optional<SwitchMatrix> matrix;
  if (!switch_policies.empty()) {
    matrix = normalization_switch_analysis(in.data, in.spec, missing, switch_policies, report.year);
  }

  auto manifest = make_manifest("sensitivity", in.spec, bounds, missing);
  manifest.sensitivity = config;
  manifest.input_digests = in.digests;
  emit(o, write_robustness(report, matrix ? &*matrix : nullptr, format, manifest), out);
  emit_manifest(o, manifest);
  return kOk;
}

int cmd_profile(const Options& opt, std::ostream& out) {
  const auto& o = opt.common;
  const auto format = opt.plot_data ? OutputFormat::Csv : output_format(o);
  const auto bounds = bounds_policy(o, o.bounds);
  const auto missing = missing_policy(o);
  const auto in = load_inputs(o);

  std::optional<int> year = opt.year;
  if (!year) {
    // cells() is sorted, so the last match is the country's latest year
    for (const auto& cell : in.data.cells()) {
      if (cell.first == opt.country) year = cell.second;
    }
  }
  const std::string label = opt.country + (year ? " " + std::to_string(*year) : "");
  if (!year) throw LookupError("no data for country-year " + label);

  const auto cards = build_scorecards(in.data, in.spec, bounds, missing);
  const auto it = std::find_if(cards.begin(), cards.end(), [&](const ScoreCard& c) {
    return c.country == opt.country && c.year == *year;
  });
  if (it == cards.end()) throw LookupError("no data for country-year " + label);

  auto manifest = make_manifest("profile", in.spec, bounds, missing);
  manifest.input_digests = in.digests;
  emit(o, write_profile(*it, in.spec, format, manifest), out);
  emit_manifest(o, manifest);
  return kOk;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool needs_data) {
  cmd->add_option("--hierarchy", o.hierarchy_path,
                  "Hierarchy document (JSON); built-in default taxonomy when omitted");
  auto* data = cmd->add_option("--data", o.data_path, "Observation file (country,year,indicator,value)");
  if (needs_data) data->required();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", o.output_path, "Write output to a file instead of stdout");
  cmd->add_option("--manifest", o.manifest_path,
                  "Write the run manifest (with input digests and timestamp) to this file");
}

void add_policy(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--bounds", o.bounds, "Normalization bounds policy")
      ->check(CLI::IsMember({"in-sample", "pooled", "goalposts"}))
      ->capture_default_str();
  cmd->add_option("--theta", o.theta, "Coverage threshold in (0, 1]")->capture_default_str();
  cmd->add_flag("--partial-nfri", o.partial_nfri,
                "Score NFRI from the available elements instead of requiring all six");
  cmd->add_option("--degenerate-score", o.degenerate_score,
                  "Score given when an indicator's bounds collapse (min == max)")
      ->capture_default_str();
  cmd->add_option("--winsorize", o.winsorize, "Trim to percentiles LO,HI before taking bounds")
      ->delimiter(',')
      ->expected(2);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composite future-readiness index engine", "ifr"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  Options opt;

  auto* init = app.add_subcommand("init-hierarchy", "Write the default hierarchy document");
  init->add_option("output", opt.init_path, "Destination path")->required();

  auto* validate = app.add_subcommand("validate", "Check a hierarchy and (optionally) a data file");
  add_common(validate, opt.common, false);

  auto* score = app.add_subcommand("score", "Compute every scorecard");
  add_common(score, opt.common, true);
  add_policy(score, opt.common);
  score->add_option("--year", opt.year, "Only emit this year");

  auto* rank_cmd = app.add_subcommand("rank", "Rank countries by one score");
  add_common(rank_cmd, opt.common, true);
  add_policy(rank_cmd, opt.common);
  rank_cmd->add_option("--score-kind", opt.score_kind, "Score to rank by")
      ->check(CLI::IsMember({"nfri", "nri", "nai", "gov", "bus", "cit", "gr", "ga", "br", "ba",
                             "cr", "ca"}))
      ->capture_default_str();
  rank_cmd->add_option("--year", opt.year, "Year to rank (default: latest)");

  auto* sens = app.add_subcommand("sensitivity", "Rank robustness under weight perturbation");
  add_common(sens, opt.common, true);
  add_policy(sens, opt.common);
  sens->add_option("--trials", opt.trials, "Number of perturbed draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sens->add_option("--sigma", opt.sigma, "Log-normal perturbation strength")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sens->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
  sens->add_option("--levels", opt.levels, "Levels to perturb")
      ->delimiter(',')
      ->check(CLI::IsMember({"indicator", "sub_element", "element"}));
  sens->add_option("--year", opt.year, "Year to rank (default: latest)");
  sens->add_option("--threads", opt.threads, "Worker threads")->capture_default_str();
  sens->add_option("--compare-bounds", opt.compare_bounds,
                   "Also correlate NFRI rankings across these bounds policies")
      ->delimiter(',')
      ->check(CLI::IsMember({"in-sample", "pooled", "goalposts"}));

  auto* profile = app.add_subcommand("profile", "Breakdown for one country-year");
  add_common(profile, opt.common, true);
  add_policy(profile, opt.common);
  profile->add_option("--country", opt.country, "Country code")->required();
  profile->add_option("--year", opt.year, "Year (default: the country's latest)");
  profile->add_flag("--plot-data", opt.plot_data, "Emit long-format series for charting");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (init->parsed()) return cmd_init_hierarchy(opt, out);
    if (validate->parsed()) return cmd_validate(opt, out);
    if (score->parsed()) return cmd_score(opt, out);
    if (rank_cmd->parsed()) return cmd_rank(opt, out);
    if (sens->parsed()) return cmd_sensitivity(opt, out);
    if (profile->parsed()) return cmd_profile(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace ifr::cli
