#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "fixtures.hpp"
#include "ifr/taxonomy.hpp"

namespace fs = std::filesystem;
using ifr::cli::ExitCode;

namespace {

const std::string kData = std::string(IFR_TEST_DATA_DIR) + "/three_countries.csv";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ifr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("ifr_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("init-hierarchy writes the default taxonomy") {
  const auto path = scratch_dir() / "h.json";
  const auto r = run({"init-hierarchy", path.string()});
  CHECK(r.code == ExitCode::kOk);
  const auto text = slurp(path);
  CHECK(ifr::parse_hierarchy(text) == ifr::build_default_ifr_hierarchy());
  CHECK(text.find("Social Capital and Trust") != std::string::npos);
  CHECK(run({"validate", "--hierarchy", path.string(), "--data", kData}).code == ExitCode::kOk);
}

TEST_CASE("init-hierarchy to an unwritable path is an I/O error") {
  CHECK(run({"init-hierarchy", "/nonexistent-dir/h.json"}).code == ExitCode::kIo);
}

TEST_CASE("validate") {
  const auto ok = run({"validate", "--data", kData});
  CHECK(ok.code == ExitCode::kOk);
  CHECK(ok.out.find("provisional") != std::string::npos);

  const auto bad = run({"validate", "--data", std::string(IFR_TEST_DATA_DIR) + "/unknown_indicator.csv"});
  CHECK(bad.code == ExitCode::kValidation);
  CHECK(bad.out.find("not_an_indicator") != std::string::npos);

  const auto dir = scratch_dir();
  write(dir / "empty.csv", "country,year,indicator,value\n");
  const auto empty = run({"validate", "--data", (dir / "empty.csv").string()});
  CHECK(empty.code == ExitCode::kOk);
  CHECK(empty.out.find("coverage is 0") != std::string::npos);

  write(dir / "broken.json", "{\"name\": ");
  CHECK(run({"validate", "--hierarchy", (dir / "broken.json").string()}).code == ExitCode::kValidation);
  CHECK(run({"validate", "--data", (dir / "missing.csv").string()}).code == ExitCode::kIo);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == ExitCode::kUsage);
  CHECK(run({"frobnicate"}).code == ExitCode::kUsage);
  CHECK(run({"rank", "--data", kData, "--score-kind", "bogus"}).code == ExitCode::kUsage);
  CHECK(run({"sensitivity", "--data", kData, "--trials", "0"}).code == ExitCode::kUsage);
  CHECK(run({"score", "--data", kData, "--theta", "0"}).code == ExitCode::kUsage);
  CHECK(run({"score", "--data", kData, "--bounds", "goalposts"}).code == ExitCode::kUsage);
  CHECK(run({"score"}).code == ExitCode::kUsage);
  CHECK(run({"--version"}).code == ExitCode::kOk);
}

TEST_CASE("score and rank on the three-country fixture") {
  const auto score = run({"score", "--data", kData, "--format", "csv", "--year", "2024"});
  REQUIRE(score.code == ExitCode::kOk);
  std::istringstream lines(score.out);
  std::string header, row;
  std::getline(lines, header);
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK_FALSE(row.starts_with(","));
    CHECK(row.find(",2024,") != std::string::npos);
  }
  CHECK(rows == 3);

  const auto ranked = run({"rank", "--data", kData, "--format", "csv"});
  REQUIRE(ranked.code == ExitCode::kOk);
  CHECK(std::count(ranked.out.begin(), ranked.out.end(), '\n') == 4);
  CHECK(ranked.out.starts_with("rank,country,year,nfri\n1,"));
  const auto nri = run({"rank", "--data", kData, "--format", "csv", "--score-kind", "nri"});
  CHECK(nri.out.starts_with("rank,country,year,nri\n"));
  CHECK(run({"rank", "--data", kData}).out.find("nfri") != std::string::npos);
}

TEST_CASE("worked example through the CLI") {
  const auto dir = scratch_dir();
  const auto ex = fixtures::worked_example();
  write(dir / "wex.json", ifr::serialize_hierarchy(ex.spec));
  write(dir / "wex.csv", fixtures::to_csv(ex.data.observations()));
  const auto r = run({"score", "--hierarchy", (dir / "wex.json").string(), "--data",
                      (dir / "wex.csv").string(), "--bounds", "goalposts"});
  CHECK(r.code == ExitCode::kOk);
  CHECK(r.out.find("35.0") != std::string::npos);
}

TEST_CASE("tie fixture reproduces min-rank ties") {
  const auto dir = scratch_dir();
  const auto spec = fixtures::with_goalposts(fixtures::tiny_hierarchy(), 0.0, 99.0);
  std::vector<ifr::Observation> rows;
  for (const auto& ind : spec.indicators) {
    rows.push_back({"AAA", 2024, ind.id, 49.0});
    rows.push_back({"BBB", 2024, ind.id, 49.0});
    rows.push_back({"CCC", 2024, ind.id, 39.0});
  }
  write(dir / "tie.json", ifr::serialize_hierarchy(spec));
  write(dir / "tie.csv", fixtures::to_csv(rows));
  const auto r = run({"rank", "--hierarchy", (dir / "tie.json").string(), "--data",
                      (dir / "tie.csv").string(), "--bounds", "goalposts", "--format", "csv"});
  CHECK(r.out == "rank,country,year,nfri\n1,AAA,2024,50\n1,BBB,2024,50\n3,CCC,2024,40\n");
}

TEST_CASE("profile") {
  const auto tree = run({"profile", "--data", kData, "--country", "OMN"});
  CHECK(tree.code == ExitCode::kOk);
  CHECK(tree.out.find("OMN 2024") != std::string::npos);
  const auto series = run({"profile", "--data", kData, "--country", "OMN", "--year", "2023", "--plot-data"});
  CHECK(series.code == ExitCode::kOk);
  CHECK(series.out.starts_with("country,year,level,node,parent,label,score,flags\nOMN,2023,index,NFRI"));

  const auto unknown = run({"profile", "--data", kData, "--country", "ZZZ"});
  CHECK(unknown.code == ExitCode::kValidation);
  CHECK(unknown.err.find("ZZZ") != std::string::npos);
  CHECK(run({"profile", "--data", kData, "--country", "OMN", "--year", "1999"}).code == ExitCode::kValidation);
}

TEST_CASE("country missing all business data") {
  const auto dir = scratch_dir();
  const auto spec = ifr::build_default_ifr_hierarchy();
  std::ifstream in(kData);
  std::ostringstream filtered;
  for (std::string line; std::getline(in, line);) {
    const auto parts = line.find("ARE,") == 0 ? line.substr(line.find(',', 4) + 1) : std::string();
    const auto id = parts.substr(0, parts.find(','));
    if (!id.empty() && spec.find_indicator(id)->sub_element_id.starts_with("B")) continue;
    filtered << line << "\n";
  }
  write(dir / "nobiz.csv", filtered.str());
  const auto r = run({"profile", "--data", (dir / "nobiz.csv").string(), "--country", "ARE", "--plot-data"});
  REQUIRE(r.code == ExitCode::kOk);
  CHECK(r.out.find("ARE,2024,element,BR,NFRI,Business Resilience,,missing") != std::string::npos);
  CHECK(r.out.find("ARE,2024,element,BA,NFRI,Business Adaptability,,missing") != std::string::npos);
  CHECK(r.out.find("ARE,2024,actor,Business,NFRI,Business Future Readiness,,missing") != std::string::npos);
}

TEST_CASE("sensitivity") {
  const auto zero = run({"sensitivity", "--data", kData, "--sigma", "0", "--trials", "5", "--format", "json"});
  REQUIRE(zero.code == ExitCode::kOk);
  CHECK(zero.out.find("\"mean_spearman\": 1.0") != std::string::npos);
  CHECK(zero.out.find("\"mean_abs_rank_shift\": 0.0") != std::string::npos);

  const std::vector<std::string> args{"sensitivity", "--data", kData, "--trials", "40", "--seed", "7",
                                      "--format", "csv", "--compare-bounds", "in-sample,pooled"};
  const auto a = run(args);
  CHECK(a.code == ExitCode::kOk);
  CHECK(a.out == run(args).out);
  CHECK(a.out.find(",7") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs and row orders") {
  const auto dir = scratch_dir();
  std::ifstream in(kData);
  std::string header;
  std::getline(in, header);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::mt19937_64 rng(9);
  std::shuffle(lines.begin(), lines.end(), rng);
  std::string shuffled = header + "\r\n";
  for (const auto& l : lines) shuffled += l + "\r\n";
  write(dir / "shuffled.csv", shuffled);

  for (const char* format : {"csv", "json", "table"}) {
    for (const char* verb : {"score", "rank"}) {
      const auto a = run({verb, "--data", kData, "--format", format});
      const auto b = run({verb, "--data", kData, "--format", format});
      const auto c = run({verb, "--data", (dir / "shuffled.csv").string(), "--format", format});
      CHECK(a.code == ExitCode::kOk);
      CHECK(a.out == b.out);
      CHECK(a.out == c.out);
    }
  }
}

TEST_CASE("output and manifest files") {
  const auto dir = scratch_dir();
  const auto r = run({"score", "--data", kData, "--format", "json", "-o", (dir / "s.json").string(),
                      "--manifest", (dir / "m.json").string()});
  CHECK(r.code == ExitCode::kOk);
  CHECK(r.out.empty());
  CHECK(slurp(dir / "s.json").find("\"scorecards\"") != std::string::npos);
  const auto manifest = slurp(dir / "m.json");
  CHECK(manifest.find("three_countries.csv") != std::string::npos);
  CHECK(manifest.find("timestamp") != std::string::npos);
}
